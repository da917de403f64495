#include "squiral/io.hpp"

#include "squiral/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace squiral {

namespace {

// Whitespace-separated tokens with '#'-to-end-of-line comments removed.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

Int parse_int(const std::string& tok, const char* what) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw input_error(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace

BlockMap parse_substitution(std::istream& in) {
    const auto tokens = tokenize(in);
    std::size_t pos = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (pos >= tokens.size())
            throw input_error(std::string("substitution file ends before ") + what);
        return tokens[pos++];
    };

    if (need("the 'dim' keyword") != "dim")
        throw input_error("substitution file must start with 'dim'");
    const Int d = parse_int(need("the dimension"), "the dimension");
    if (d < 1 || d > 8) throw input_error("dimension must be between 1 and 8");

    if (need("the 'size' keyword") != "size")
        throw input_error("expected 'size' after the dimension");
    BlockMap map;
    map.size.resize(static_cast<std::size_t>(d));
    for (Int i = 0; i < d; ++i)
        map.size[static_cast<std::size_t>(i)] = parse_int(need("a block size"), "a block size");

    if (need("the 'block' keyword") != "block")
        throw input_error("expected 'block' after the sizes");
    const Int cells = checked_product(map.size);
    map.entries.reserve(static_cast<std::size_t>(cells));
    for (Int i = 0; i < cells; ++i) {
        const std::string& tok = need("a block entry");
        if (tok == "+" || tok == "+1")
            map.entries.push_back(1);
        else if (tok == "-" || tok == "-1")
            map.entries.push_back(-1);
        else
            throw input_error("block entries must be '+' or '-', got '" + tok + "'");
    }
    if (pos != tokens.size()) throw input_error("trailing tokens after the block entries");

    validate(map);
    return map;
}

BlockMap load_map(const std::string& source) {
    if (source == "builtin:squiral") return builtin_squiral();
    if (source.rfind("builtin:", 0) == 0)
        throw input_error("unknown builtin map '" + source + "' (only builtin:squiral)");
    std::ifstream in(source);
    if (!in) throw input_error("cannot open substitution file '" + source + "'");
    return parse_substitution(in);
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

namespace {

void write_stamp(std::ostream& out, const std::string& stamp) {
    std::istringstream ss(stamp);
    std::string line;
    while (std::getline(ss, line)) out << "# " << line << "\n";
}

} // namespace

void write_patch_csv(std::ostream& out, const LatticePatch& patch, const std::string& stamp) {
    write_stamp(out, stamp);
    const int d = patch.dim();
    for (int i = 0; i < d; ++i) out << "m" << i + 1 << ",";
    out << "value\n";
    Point rel(d, 0);
    Int flat = 0;
    do {
        for (int i = 0; i < d; ++i) out << patch.origin[i] + rel[i] << ",";
        out << static_cast<int>(patch.values[static_cast<std::size_t>(flat++)]) << "\n";
    } while (next_cell(rel, patch.shape));
}

void write_patch_pgm(std::ostream& out, const LatticePatch& patch, const std::string& stamp) {
    const int d = patch.dim();
    if (d > 2) throw input_error("image export supports at most two dimensions");
    const Int height = d == 2 ? patch.shape[0] : 1;
    const Int width = d == 2 ? patch.shape[1] : patch.shape[0];

    out << "P2\n";
    write_stamp(out, stamp);
    out << width << " " << height << "\n255\n";
    for (Int row = 0; row < height; ++row) {
        // Image rows top-to-bottom run along the first axis descending.
        const Int i = height - 1 - row;
        for (Int j = 0; j < width; ++j) {
            const std::int8_t v = patch.values[static_cast<std::size_t>(i * width + j)];
            out << (v > 0 ? 255 : 0) << (j + 1 == width ? "\n" : " ");
        }
    }
}

void write_eta_csv(std::ostream& out, const EtaTable& table, Int box, const std::string& stamp) {
    write_stamp(out, stamp);
    const int d = table.dim();
    for (int i = 0; i < d; ++i) out << "m" << i + 1 << ",";
    out << "numerator,denominator,value\n";
    const Dims shape(d, 2 * box + 1);
    Point rel(d, 0);
    do {
        Point m(d);
        for (int i = 0; i < d; ++i) m[i] = rel[i] - box;
        const Rational value = table.eta(m);
        for (int i = 0; i < d; ++i) out << m[i] << ",";
        out << num(value).str() << "," << den(value).str() << ","
            << format_double(to_double(value)) << "\n";
    } while (next_cell(rel, shape));
}

void write_eta_brute_csv(std::ostream& out, const LatticePatch& patch, Int box, Int window,
                         const std::string& stamp) {
    write_stamp(out, stamp);
    const int d = patch.dim();
    for (int i = 0; i < d; ++i) out << "m" << i + 1 << ",";
    out << "value\n";
    const Dims shape(d, 2 * box + 1);
    Point rel(d, 0);
    do {
        Point m(d);
        for (int i = 0; i < d; ++i) m[i] = rel[i] - box;
        const double value = eta_bruteforce(patch, m, window);
        for (int i = 0; i < d; ++i) out << m[i] << ",";
        out << format_double(value) << "\n";
    } while (next_cell(rel, shape));
}

void write_grid_csv(std::ostream& out, const GridFunction& grid, const std::string& stamp) {
    write_stamp(out, stamp);
    const int d = grid.dims;
    for (int i = 0; i < d; ++i) out << "x" << i + 1 << ",";
    out << "value\n";
    const Dims shape(static_cast<std::size_t>(d), grid.points_per_axis());
    Point k(static_cast<std::size_t>(d), 0);
    Int flat = 0;
    do {
        for (int i = 0; i < d; ++i)
            out << format_double(static_cast<double>(k[i]) / static_cast<double>(grid.resolution))
                << ",";
        out << format_double(grid.samples[static_cast<std::size_t>(flat++)]) << "\n";
    } while (next_cell(k, shape));
}

std::string write_grid_pgm(std::ostream& out, const GridFunction& grid, const std::string& stamp) {
    if (grid.dims != 2) throw input_error("image export needs a two-dimensional grid");
    const Int n = grid.points_per_axis();
    double lo = grid.samples[0], hi = grid.samples[0];
    for (double v : grid.samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;

    out << "P2\n";
    write_stamp(out, stamp);
    out << n << " " << n << "\n255\n";
    for (Int row = 0; row < n; ++row) {
        const Int i = n - 1 - row;
        for (Int j = 0; j < n; ++j) {
            const double v = grid.samples[static_cast<std::size_t>(i * n + j)];
            const int g = static_cast<int>(255.0 * (v - lo) / span + 0.5);
            out << g << (j + 1 == n ? "\n" : " ");
        }
    }
    return "min " + format_double(lo) + " max " + format_double(hi);
}

void write_wiener_csv(std::ostream& out, const WienerReport& report, const std::string& stamp) {
    write_stamp(out, stamp);
    out << "level,window,sigma_numerator,sigma_denominator,sigma,quotient\n";
    for (const auto& lv : report.levels) {
        out << lv.level << ",";
        for (std::size_t i = 0; i < lv.window.size(); ++i)
            out << lv.window[i] << (i + 1 == lv.window.size() ? "" : "x");
        out << "," << num(lv.sigma).str() << "," << den(lv.sigma).str() << ","
            << format_double(lv.sigma_float) << "," << format_double(lv.quotient) << "\n";
    }
    out << "# fitted_exponent " << format_double(report.fitted_exponent) << "\n";
    out << "# verdict " << to_string(report.verdict) << "\n";
}

} // namespace squiral
