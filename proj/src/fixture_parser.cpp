#include "wres/symbol_jets.hpp"

#include <cctype>
#include <map>

namespace wres {

namespace {

using BV = BoundarySymbolValue;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BV parse() {
        BV v = sum();
        skip();
        if (pos_ != s_.size()) fail("expected end of input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw fixture_parse_error(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }

    std::string ident() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (b == pos_ || std::isdigit(static_cast<unsigned char>(s_[b]))) {
            pos_ = b;
            fail("expected identifier");
        }
        return s_.substr(b, pos_ - b);
    }

    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected integer");
        long v = std::stol(s_.substr(b, pos_ - b));
        return neg ? -v : v;
    }

    int index() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            if (v < 1 || v > kDim) fail("index out of range 1..7");
            return static_cast<int>(v);
        }
        std::size_t at = pos_;
        std::string id = ident();
        if (id == "n") return kDim;
        auto it = env_.find(id);
        if (it == env_.end()) {
            pos_ = at;
            fail("expected index (integer, 'n' or bound variable)");
        }
        return it->second;
    }

    std::vector<int> index_list(std::size_t count) {
        expect('(');
        std::vector<int> v;
        for (std::size_t i = 0; i < count; ++i) {
            if (i) expect(',');
            v.push_back(index());
        }
        expect(')');
        return v;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    BV sum() {
        BV v = product();
        for (;;) {
            if (accept('+')) v += product();
            else if (accept('-')) v -= product();
            else return v;
        }
    }

    BV product() {
        bool neg = accept('-');
        BV v = factor();
        for (;;) {
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                BV d = factor();
                try {
                    v = v * d.inverse();
                } catch (const arithmetic_error&) {
                    pos_ = at;
                    fail("expected a ξn-rational scalar divisor");
                }
            } else if (starts_factor()) {
                v = v * factor();
            } else {
                break;
            }
        }
        return neg ? -v : v;
    }

    BV factor() {
        BV b = atom();
        if (!accept('^')) return b;
        long e = integer();
        if (e < 0) {
            b = b.inverse();
            e = -e;
        }
        BV r(GaussianRational(1));
        for (long k = 0; k < e; ++k) r = r * b;
        return r;
    }

    BV atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BV v = sum();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BV(GaussianRational(integer()));
        std::size_t at = pos_;
        std::string id = ident();
        if (id == "i") return BV(GaussianRational::i());
        if (id == "h1") return BV::atom(param_atom(Param::H1));
        if (id == "h2") return BV::atom(param_atom(Param::H2));
        if (id == "sm") return BV::atom(param_atom(Param::SM));
        if (id == "sb") return BV::atom(param_atom(Param::SB));
        if (id == "tv") return BV::atom(param_atom(Param::TV));
        if (id == "xin") return BV(PoleLimitedRational::xi());
        if (id == "xi") {
            int k = index_list(1)[0];
            return k == kDim ? BV(PoleLimitedRational::xi()) : BV::atom(xi_atom(k));
        }
        if (id == "c" || id == "cb") {
            int k = index_list(1)[0];
            return BV::from(clifford_from_generator(id == "c" ? GenKind::c : GenKind::cbar, k));
        }
        if (id == "R" || id == "RM") {
            auto ix = index_list(4);
            if (id == "R")
                for (int v : ix)
                    if (v == kDim) fail("boundary curvature index must be below n");
            return BV::from(riemann_component(ix[0], ix[1], ix[2], ix[3]), id == "R" ? AtomKind::rb : AtomKind::rm);
        }
        if (id == "N") {
            auto ix = index_list(2);
            return BV::atom(make_atom(AtomKind::grad_v, ix[0], ix[1]));
        }
        if (id == "sum") {
            expect('(');
            std::string var = ident();
            expect('=');
            long lo = integer();
            if (!accept_word("..")) fail("expected '..'");
            long hi = integer();
            expect(',');
            std::size_t body = pos_;
            auto saved = env_.find(var) != env_.end() ? std::optional<int>(env_[var]) : std::nullopt;
            BV total;
            std::size_t end = body;
            for (long v = lo; v <= hi; ++v) {
                env_[var] = static_cast<int>(v);
                pos_ = body;
                total += sum();
                end = pos_;
            }
            if (lo > hi) {
                // Parse once for syntax with a placeholder binding.
                env_[var] = 1;
                pos_ = body;
                sum();
                end = pos_;
            }
            if (saved) env_[var] = *saved;
            else env_.erase(var);
            pos_ = end;
            expect(')');
            return total;
        }
        pos_ = at;
        fail("unknown name '" + id + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::map<std::string, int> env_;
};

}  // namespace

BoundarySymbolValue parse_fixture(const std::string& text) { return Parser(text).parse(); }

}  // namespace wres
