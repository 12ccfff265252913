#include "mct/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace mct {

namespace {

// Keeps n(n-1)/2 and the dense color array within sane memory for a line
// oriented text format.
constexpr long long kMaxTextN = 10000;
constexpr long long kMaxTextK = 1000000;

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    long long line_no() const { return line_; }

    // Next line, stripped of a trailing carriage return; false at EOF.
    bool next(std::string& out) {
        if (!std::getline(in_, out)) return false;
        ++line_;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Err::Parse, "line " + std::to_string(line_ + 1) + ": " + what);
    }

    [[noreturn]] void fail_here(const std::string& what) const {
        throw Error(Err::Parse, "line " + std::to_string(line_) + ": " + what);
    }

private:
    std::istream& in_;
    long long line_ = 0;
};

std::vector<long long> split_numbers(LineReader& r, const std::string& line,
                                     std::size_t expected, const char* what) {
    std::istringstream ss(line);
    std::vector<long long> vals;
    long long v;
    while (ss >> v) vals.push_back(v);
    std::string leftover;
    if (!ss.eof() && (ss.clear(), ss >> leftover))
        r.fail_here(std::string("malformed ") + what);
    if (vals.size() != expected)
        r.fail_here(std::string("expected ") + std::to_string(expected) + " fields for " + what);
    return vals;
}

std::string must_line(LineReader& r, const char* what) {
    std::string line;
    if (!r.next(line)) r.fail(std::string("unexpected end of file, wanted ") + what);
    return line;
}

void expect_no_trailing(LineReader& r) {
    std::string line;
    while (r.next(line)) {
        if (line.find_first_not_of(" \t") != std::string::npos)
            r.fail_here("trailing content after the last expected line");
    }
}

} // namespace

EdgeColoring read_ecg(std::istream& in) {
    LineReader r(in);
    if (must_line(r, "header") != "ecg 1") r.fail_here("expected header `ecg 1`");

    auto dims = split_numbers(r, must_line(r, "dimensions"), 2, "dimensions");
    const long long n = dims[0], k = dims[1];
    if (n < 1 || n > kMaxTextN) r.fail_here("vertex count out of range");
    if (k < 1 || k > kMaxTextK) r.fail_here("color count out of range");

    const long long m = n * (n - 1) / 2;
    std::vector<ColorId> colors;
    colors.reserve(static_cast<std::size_t>(m));
    long long eu = 0, ev = 1; // expected pair, ascending (u, v)
    for (long long i = 0; i < m; ++i) {
        auto f = split_numbers(r, must_line(r, "an edge"), 3, "an edge");
        if (f[0] != eu || f[1] != ev)
            r.fail_here("expected pair " + std::to_string(eu) + " " + std::to_string(ev));
        if (f[2] < 0 || f[2] >= k) r.fail_here("color out of range");
        colors.push_back(static_cast<ColorId>(f[2]));
        if (++ev == n) {
            ++eu;
            ev = eu + 1;
        }
    }
    expect_no_trailing(r);
    return EdgeColoring::from_dense(static_cast<int>(n), static_cast<int>(k),
                                    std::move(colors));
}

EdgeColoring read_ecg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::Io, "cannot open " + path);
    return read_ecg(in);
}

void write_ecg(std::ostream& out, const EdgeColoring& c) {
    out << "ecg 1\n" << c.n() << ' ' << c.k() << '\n';
    std::size_t rank = 0;
    for (Vertex u = 0; u < c.n(); ++u)
        for (Vertex v = u + 1; v < c.n(); ++v, ++rank)
            out << u << ' ' << v << ' ' << c.dense()[rank] << '\n';
}

void write_ecg_file(const std::string& path, const EdgeColoring& c) {
    std::ofstream out(path);
    if (!out) throw Error(Err::Io, "cannot open " + path + " for writing");
    write_ecg(out, c);
    out.flush();
    if (!out) throw Error(Err::Io, "failed writing " + path);
}

Trail read_cert(std::istream& in) {
    LineReader r(in);
    if (must_line(r, "header") != "cert 1") r.fail_here("expected header `cert 1`");

    auto head = split_numbers(r, must_line(r, "color/length/closed"), 3,
                              "color/length/closed");
    const long long color = head[0], len = head[1], closed = head[2];
    if (color < 0) r.fail_here("color must be nonnegative");
    if (len < 0 || len > kMaxTextN * (kMaxTextN - 1) / 2)
        r.fail_here("length out of range");
    if (closed != 0 && closed != 1) r.fail_here("closed flag must be 0 or 1");

    auto ids = split_numbers(r, must_line(r, "the vertex list"),
                             static_cast<std::size_t>(len) + 1, "the vertex list");
    Trail t;
    t.color = static_cast<ColorId>(color);
    t.closed = closed == 1;
    t.vertices.reserve(ids.size());
    for (long long id : ids) {
        if (id < 0 || id > kMaxTextN) r.fail_here("vertex id out of range");
        t.vertices.push_back(static_cast<Vertex>(id));
    }
    expect_no_trailing(r);
    return t;
}

Trail read_cert_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::Io, "cannot open " + path);
    return read_cert(in);
}

void write_cert(std::ostream& out, const Trail& t) {
    out << "cert 1\n" << t.color << ' ' << t.length() << ' ' << (t.closed ? 1 : 0)
        << '\n';
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        out << t.vertices[i] << (i + 1 == t.vertices.size() ? '\n' : ' ');
}

void write_cert_file(const std::string& path, const Trail& t) {
    std::ofstream out(path);
    if (!out) throw Error(Err::Io, "cannot open " + path + " for writing");
    write_cert(out, t);
    out.flush();
    if (!out) throw Error(Err::Io, "failed writing " + path);
}

} // namespace mct
