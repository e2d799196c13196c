#include "momoa/io.hpp"

#include "momoa/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

namespace momoa {
namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

class Tokenizer {
public:
    explicit Tokenizer(const std::string& text) : text_(text) {}

    bool next(Token& tok) {
        while (pos_ < text_.size() && is_space(text_[pos_]))
            advance();
        if (pos_ >= text_.size())
            return false;
        tok.line = line_;
        tok.column = col_;
        tok.text.clear();
        while (pos_ < text_.size() && !is_space(text_[pos_])) {
            tok.text.push_back(text_[pos_]);
            advance();
        }
        return true;
    }

    int line() const { return line_; }
    int column() const { return col_; }

private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

Token expect(Tokenizer& tz, const char* what) {
    Token tok;
    if (!tz.next(tok))
        throw ParseError(std::string("unexpected end of input, expected ") + what, tz.line(),
                         tz.column());
    return tok;
}

long long expect_int(Tokenizer& tz, const char* what) {
    const Token tok = expect(tz, what);
    long long value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("expected an integer for " + std::string(what) + ", got '" + tok.text + "'",
                         tok.line, tok.column);
    return value;
}

// Portable uniform integer in [lo, hi]; std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries, this is.
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
    const unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
    const unsigned long long limit =
        std::numeric_limits<unsigned long long>::max() / span * span;
    unsigned long long u;
    do {
        u = rng();
    } while (u >= limit);
    return lo + static_cast<long long>(u % span);
}

void write_points_block(std::ostringstream& out, const char* tag,
                        const std::vector<ObjPoint>& points) {
    for (const ObjPoint& y : points) {
        out << tag;
        for (const Rational& c : y)
            out << ' ' << rat_str(c);
        out << '\n';
    }
}

void write_facets_block(std::ostringstream& out, const char* tag,
                        std::vector<Halfspace> facets) {
    std::sort(facets.begin(), facets.end(), HalfspaceLexLess{});
    for (const Halfspace& h : facets) {
        out << tag;
        for (const Rational& c : h.w)
            out << ' ' << rat_str(c);
        out << ' ' << rat_str(h.alpha) << '\n';
    }
}

} // namespace

Instance parse_instance(const std::string& text) {
    Tokenizer tz(text);
    const Token kind = expect(tz, "instance kind");
    const long long p64 = expect_int(tz, "objective count p");
    const long long n64 = expect_int(tz, "size n");
    if (p64 < 1 || p64 > 64)
        throw ParseError("objective count out of range", kind.line, kind.column);
    if (n64 < 1 || n64 > 100000)
        throw ParseError("size out of range", kind.line, kind.column);
    const int p = static_cast<int>(p64);
    const int n = static_cast<int>(n64);

    Instance result = [&]() -> Instance {
        if (kind.text == "map") {
            AssignmentData d;
            d.p = p;
            d.n = n;
            d.costs.assign(p, {});
            for (int k = 0; k < p; ++k) {
                d.costs[k].reserve(static_cast<std::size_t>(n) * n);
                for (int i = 0; i < n * n; ++i)
                    d.costs[k].push_back(expect_int(tz, "cost entry"));
            }
            return Instance(std::move(d));
        }
        if (kind.text == "mkp") {
            KnapsackData d;
            d.p = p;
            d.n = n;
            d.capacity = expect_int(tz, "capacity");
            for (int j = 0; j < n; ++j)
                d.weights.push_back(expect_int(tz, "item weight"));
            d.profits.assign(p, {});
            for (int k = 0; k < p; ++k)
                for (int j = 0; j < n; ++j)
                    d.profits[k].push_back(expect_int(tz, "profit entry"));
            return Instance(std::move(d));
        }
        if (kind.text == "pts") {
            ExplicitSetData d;
            d.p = p;
            for (int i = 0; i < n; ++i) {
                std::vector<long long> y;
                for (int k = 0; k < p; ++k)
                    y.push_back(expect_int(tz, "point coordinate"));
                d.points.push_back(std::move(y));
            }
            return Instance(std::move(d));
        }
        throw ParseError("unknown instance kind '" + kind.text + "'", kind.line, kind.column);
    }();

    Token trailing;
    if (tz.next(trailing))
        throw ParseError("unexpected trailing token '" + trailing.text + "'", trailing.line,
                         trailing.column);
    return result;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << kind_name(inst.kind()) << ' ' << inst.objectives() << ' ';
    switch (inst.kind()) {
    case InstanceKind::Assignment: {
        const auto& a = inst.assignment();
        out << a.n << '\n';
        for (int k = 0; k < a.p; ++k)
            for (int i = 0; i < a.n; ++i) {
                for (int j = 0; j < a.n; ++j)
                    out << a.costs[k][static_cast<std::size_t>(i) * a.n + j]
                        << (j + 1 == a.n ? '\n' : ' ');
            }
        break;
    }
    case InstanceKind::Knapsack: {
        const auto& k = inst.knapsack();
        out << k.n << '\n' << k.capacity << '\n';
        for (int j = 0; j < k.n; ++j)
            out << k.weights[j] << (j + 1 == k.n ? '\n' : ' ');
        for (int kk = 0; kk < k.p; ++kk)
            for (int j = 0; j < k.n; ++j)
                out << k.profits[kk][j] << (j + 1 == k.n ? '\n' : ' ');
        break;
    }
    case InstanceKind::ExplicitSet: {
        const auto& e = inst.explicit_set();
        out << e.points.size() << '\n';
        for (const auto& y : e.points)
            for (std::size_t k = 0; k < y.size(); ++k)
                out << y[k] << (k + 1 == y.size() ? '\n' : ' ');
        break;
    }
    }
    return out.str();
}

Instance generate_instance(InstanceKind kind, int p, int n, std::uint64_t seed) {
    if (p < 2)
        throw ValidationError("generator needs p >= 2");
    if (n < 1)
        throw ValidationError("generator needs n >= 1");
    std::mt19937_64 rng(seed);
    switch (kind) {
    case InstanceKind::Assignment: {
        AssignmentData d;
        d.p = p;
        d.n = n;
        d.costs.assign(p, {});
        for (int k = 0; k < p; ++k) {
            d.costs[k].reserve(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n * n; ++i)
                d.costs[k].push_back(uniform_int(rng, 1, 20));
        }
        return Instance(std::move(d));
    }
    case InstanceKind::Knapsack: {
        KnapsackData d;
        d.p = p;
        d.n = n;
        long long weight_sum = 0;
        for (int j = 0; j < n; ++j) {
            d.weights.push_back(uniform_int(rng, 1, 1000));
            weight_sum += d.weights.back();
        }
        d.capacity = (weight_sum + 1) / 2; // half the total weight, rounded up
        d.profits.assign(p, {});
        for (int k = 0; k < p; ++k)
            for (int j = 0; j < n; ++j)
                d.profits[k].push_back(uniform_int(rng, 1, 1000));
        return Instance(std::move(d));
    }
    case InstanceKind::ExplicitSet:
        throw ValidationError("the generator supports map and mkp instances");
    }
    throw InternalError("unknown instance kind");
}

std::string oracle_name(OracleKind k) {
    return k == OracleKind::Sep ? "sep" : "tsep";
}

std::string mode_name(ArithmeticMode m) {
    return m == ArithmeticMode::Exact ? "exact" : "float";
}

std::string write_result(const RunResult& result) {
    std::ostringstream out;
    out << "solved: " << (result.solved ? "true" : "false") << '\n';
    out << "oracle: " << oracle_name(result.oracle) << '\n';
    out << "mode: " << mode_name(result.mode) << '\n';
    out << "points: " << result.extreme_points.size() << '\n';
    out << "facets: " << result.facets.size() << '\n';
    out << "ws_calls: " << result.stats.ws_calls << '\n';
    out << "cuts: " << result.stats.cuts_added << '\n';
    out << "seconds: " << std::fixed << std::setprecision(3) << result.stats.seconds << '\n';

    std::vector<ObjPoint> points = result.extreme_points;
    std::sort(points.begin(), points.end(), LexLess{});
    write_points_block(out, "point", points);
    write_facets_block(out, "facet", result.facets);

    if (!result.snapshots.empty()) {
        out << "snapshots: " << result.snapshots.size() << '\n';
        for (const LowerBoundSet& s : result.snapshots) {
            out << "snapshot " << s.iteration << ' ' << s.vertices.size() << ' '
                << s.halfspaces.size() << '\n';
            write_points_block(out, "spoint", s.vertices);
            write_facets_block(out, "sfacet", s.halfspaces);
        }
    }
    return out.str();
}

} // namespace momoa
