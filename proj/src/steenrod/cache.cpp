#include "cacti/steenrod/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace cacti::steenrod {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string matrix_line(const graded::FpMatrix& m) {
    std::ostringstream os;
    os << m.rows() << " " << m.cols();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) os << " " << m.at(r, c);
    return os.str();
}

graded::FpMatrix parse_matrix(std::istringstream& is, int p) {
    int rows, cols;
    is >> rows >> cols;
    graded::FpMatrix m(rows, cols, p);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v;
            is >> v;
            m.at(r, c) = v;
        }
    return m;
}

}  // namespace

std::string serialize_tables(const BocksteinTables& tables) {
    std::ostringstream body;
    body << "steenrod-cache v1\n";
    body << "p " << tables.p << " N " << tables.N << "\n";
    for (const auto& m : tables.left) body << "L " << matrix_line(m) << "\n";
    for (const auto& m : tables.right) body << "R " << matrix_line(m) << "\n";
    std::string s = body.str();
    std::ostringstream out;
    out << s << "checksum " << fnv1a(s) << "\n";
    return out.str();
}

BocksteinTables deserialize_tables(const std::string& text) {
    size_t pos = text.rfind("checksum ");
    if (pos == std::string::npos) throw CacheError("cache: missing checksum");
    std::string body = text.substr(0, pos);
    std::string tail = text.substr(pos);
    std::istringstream ts(tail);
    std::string word;
    uint64_t sum;
    ts >> word >> sum;
    if (fnv1a(body) != sum) throw CacheError("cache: checksum mismatch");

    std::istringstream is(body);
    std::string header;
    std::getline(is, header);
    if (header != "steenrod-cache v1") throw CacheError("cache: bad header");
    BocksteinTables out;
    std::string w;
    is >> w >> out.p >> w >> out.N;
    std::string kind;
    while (is >> kind) {
        std::string rest;
        std::getline(is, rest);
        std::istringstream ls(rest);
        if (kind == "L")
            out.left.push_back(parse_matrix(ls, out.p));
        else if (kind == "R")
            out.right.push_back(parse_matrix(ls, out.p));
        else
            throw CacheError("cache: bad record");
    }
    if (static_cast<int>(out.left.size()) != out.N || static_cast<int>(out.right.size()) != out.N)
        throw CacheError("cache: truncated record set");
    return out;
}

void save_tables(const BocksteinTables& tables, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CacheError("cache: cannot write " + path);
    f << serialize_tables(tables);
}

std::optional<BocksteinTables> load_tables(const std::string& path, int p, int N) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::stringstream buf;
    buf << f.rdbuf();
    BocksteinTables t = deserialize_tables(buf.str());
    if (t.p != p || t.N != N) return std::nullopt;  // keyed miss, not an error
    return t;
}

BocksteinTables tables_for(int p, int N, const std::string& cache_path) {
    if (!cache_path.empty()) {
        if (auto cached = load_tables(cache_path, p, N)) return *cached;
    }
    MilnorAlgebra milnor(p, N);
    BocksteinTables t = bockstein_ops(milnor);
    if (!cache_path.empty()) save_tables(t, cache_path);
    return t;
}

}  // namespace cacti::steenrod
