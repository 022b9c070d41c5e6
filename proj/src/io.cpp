#include "ssd/io.hpp"

#include "ssd/bitmatrix.hpp"

#include <fstream>
#include <sstream>

namespace ssd {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw parse_error("line " + std::to_string(line) + ": " + what);
}

// next line that is neither blank nor a '#' comment; false on EOF
bool next_content_line(std::istream& in, std::string& out, int& line) {
    while (std::getline(in, out)) {
        ++line;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        std::size_t at = out.find_first_not_of(" \t");
        if (at == std::string::npos) continue;
        if (out[at] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

LoadedCode read_code(std::istream& in) {
    int line = 0;
    std::string text;
    if (!next_content_line(in, text, line)) fail(line + 1, "missing \"n k\" header");
    int n = 0, k = 0;
    {
        std::istringstream header(text);
        char extra;
        if (!(header >> n >> k) || (header >> extra)) fail(line, "header must be \"n k\"");
    }
    if (n < 1 || k < 0 || k > n) fail(line, "header out of range");

    BitMatrix m(0, n);
    for (int i = 0; i < k; ++i) {
        if (!next_content_line(in, text, line))
            fail(line + 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(i));
        std::size_t from = text.find_first_not_of(" \t");
        std::size_t to = text.find_last_not_of(" \t");
        std::string row = text.substr(from, to - from + 1);
        if (static_cast<int>(row.size()) != n)
            fail(line, "row has " + std::to_string(row.size()) + " characters, expected " +
                           std::to_string(n));
        if (row.find_first_not_of("01") != std::string::npos)
            fail(line, "row characters must be 0 or 1");
        m.append_row(BitVector::from_string(row));
    }

    LoadedCode loaded;
    loaded.declared_rows = k;
    loaded.code = LinearCode::from_generators(m);
    if (loaded.code.dim() < k)
        loaded.warning = "rows are dependent: rank " + std::to_string(loaded.code.dim()) +
                         " of " + std::to_string(k) + " listed generators";
    return loaded;
}

LoadedCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << c.length() << ' ' << c.dim() << '\n';
    for (int i = 0; i < c.dim(); ++i) out << c.generator().row(i).to_string() << '\n';
}

void write_code_file(const std::string& path, const LinearCode& c) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_code(out, c);
    if (!out) throw parse_error("failed writing " + path);
}

Involution read_involution(std::istream& in) {
    int line = 0;
    std::string text;
    if (!next_content_line(in, text, line)) fail(line + 1, "missing permutation line");
    std::istringstream fields(text);
    std::vector<int> images;
    int v;
    while (fields >> v) images.push_back(v);
    if (!fields.eof()) fail(line, "permutation entries must be integers");
    if (images.empty()) fail(line, "empty permutation");
    try {
        return Involution::from_images_1based(images);
    } catch (const std::invalid_argument& e) {
        fail(line, e.what());
    }
}

Involution read_involution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_involution(in);
}

}  // namespace ssd
