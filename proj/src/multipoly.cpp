#include "mdr/multipoly.hpp"

#include <cctype>
#include <ostream>
#include <set>
#include <sstream>

namespace mdr {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exps(p.vars_.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::var(const std::string& name, const std::vector<std::string>& vars) {
    MultiPoly p(vars);
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) fail(ErrKind::Parse, "variable '" + name + "' not in context");
    Exps e(vars.size(), 0);
    e[static_cast<size_t>(it - vars.begin())] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) fail(ErrKind::InvariantViolation, "constant_value of nonconstant " + str());
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
}

long MultiPoly::degree_in(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return terms_.empty() ? -1 : 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
    return d;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) fail(ErrKind::DegenerateInput, "leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

const Exps& MultiPoly::leading_exps() const {
    if (terms_.empty()) fail(ErrKind::DegenerateInput, "leading term of zero polynomial");
    return terms_.begin()->first;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::aligned(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    auto merged = merge_vars(a.vars_, b.vars_);
    return {a.on_vars(merged), b.on_vars(merged)};
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = MultiPoly::aligned(a, b);
    for (const auto& [e, c] : y.terms_) {
        auto it = x.terms_.find(e);
        if (it == x.terms_.end()) {
            x.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) x.terms_.erase(it);
        }
    }
    return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = MultiPoly::aligned(a, b);
    MultiPoly r(x.vars_);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) {
                long s = static_cast<long>(ea[i]) + eb[i];
                if (s >= (1L << 31)) fail(ErrKind::DegenerateInput, "exponent overflow");
                e[i] = static_cast<int>(s);
            }
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_[e] = std::move(c);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) fail(ErrKind::DegenerateInput, "negative polynomial power");
    MultiPoly acc = constant(Rational(1), vars_);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = MultiPoly::aligned(a, b);
    return x.terms_ == y.terms_;
}

MultiPoly MultiPoly::derivative(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    MultiPoly r(vars_);
    if (it == vars_.end()) return r;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exps d = e;
        d[idx] -= 1;
        r.terms_[d] = c * Rational(e[idx]);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& v, const MultiPoly& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return *this;
    auto cs = coeffs_in(v);
    auto merged = merge_vars(vars_, value.vars());
    MultiPoly r(merged);
    // Horner in v
    for (size_t i = cs.size(); i-- > 0;) r = r * value + cs[i];
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                fail(ErrKind::Precondition, "eval: no value for variable " + vars_[i]);
            t *= it->second.pow(e[i]);
        }
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::on_vars(const std::vector<std::string>& vars) const {
    std::vector<long> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        where[i] = it == vars.end() ? -1 : (it - vars.begin());
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : terms_) {
        Exps ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                fail(ErrKind::InvariantViolation, "on_vars drops used variable " + vars_[i]);
            ne[static_cast<size_t>(where[i])] = e[i];
        }
        r.terms_[ne] = c;
    }
    return r;
}

MultiPoly MultiPoly::pruned() const {
    std::vector<std::string> used;
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (const auto& [e, c] : terms_) {
            if (e[i] != 0) {
                used.push_back(vars_[i]);
                break;
            }
        }
    }
    return on_vars(used);
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return {*this};
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = degree_in(v);
    std::vector<MultiPoly> cs(static_cast<size_t>(std::max(d, 0L)) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exps rest = e;
        int k = rest[idx];
        rest[idx] = 0;
        cs[static_cast<size_t>(k)].terms_[rest] = c;
    }
    return cs;
}

MultiPoly MultiPoly::from_coeffs_in(const std::string& v, const std::vector<MultiPoly>& cs,
                                    const std::vector<std::string>& vars) {
    MultiPoly r(vars);
    MultiPoly xv = MultiPoly::var(v, vars);
    for (size_t i = cs.size(); i-- > 0;) r = r * xv + cs[i].on_vars(vars);
    return r;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) fail(ErrKind::DegenerateInput, "division by zero polynomial");
    auto [r, d] = MultiPoly::aligned(a, b);
    MultiPoly q(r.vars_);
    const Exps& de = d.leading_exps();
    while (!r.is_zero()) {
        const Exps& re = r.leading_exps();
        Exps qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rational qc = r.leading_coeff() / d.leading_coeff();
        MultiPoly mono(r.vars_);
        mono.terms_[qe] = qc;
        q += mono;
        r -= mono * d;
    }
    return q;
}

MultiPoly MultiPoly::integer_primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, c.den());
    for (const auto& [e, c] : terms_) num_gcd = gcd(num_gcd, c.num() * (den_lcm / c.den()));
    Rational scale(den_lcm, num_gcd);
    if (leading_coeff().sign() < 0) scale = -scale;
    return scaled(scale.abs().sign() == 0 ? Rational(1) : scale);
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inv());
}

void MultiPoly::set_term(const Exps& e, const Rational& c) {
    if (e.size() != vars_.size()) fail(ErrKind::InvariantViolation, "exponent arity mismatch");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

// ---------------------------------------------------------------- printing

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        first = false;
        bool has_var = false;
        for (int x : e)
            if (x != 0) has_var = true;
        if (!has_var) {
            os << a.str();
            continue;
        }
        bool emitted = false;
        if (!a.is_one()) {
            os << a.str();
            emitted = true;
        }
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (emitted) os << '*';
            os << vars_[i];
            if (e[i] != 1) os << '^' << e[i];
            emitted = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ------------------------------------------------------------------ parser

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& ctx;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void err(const std::string& what) {
        fail(ErrKind::Parse, what + " at column " + std::to_string(pos + 1) + " in '" + s + "'");
    }

    MultiPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) err("expected exponent");
            long e = std::stol(s.substr(start, pos - start));
            if (e >= (1L << 31)) err("exponent too large");
            b = b.pow(e);
        }
        return b;
    }

    MultiPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly inner = expr();
            if (!eat(')')) err("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (eat('/')) {
                std::string den = digits();
                if (den.empty()) err("expected denominator");
                return MultiPoly::constant(Rational::parse(num + "/" + den), ctx);
            }
            return MultiPoly::constant(Rational::parse(num), ctx);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (std::find(ctx.begin(), ctx.end(), name) == ctx.end())
                err("unknown variable '" + name + "'");
            return MultiPoly::var(name, ctx);
        }
        err("unexpected character");
    }

    std::string digits() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text,
                           const std::optional<std::vector<std::string>>& vars) {
    std::vector<std::string> ctx;
    if (vars) {
        ctx = *vars;
    } else {
        std::set<std::string> names;
        for (size_t i = 0; i < text.size();) {
            if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
                size_t j = i;
                while (j < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                    ++j;
                names.insert(text.substr(i, j - i));
                i = j;
            } else {
                ++i;
            }
        }
        ctx.assign(names.begin(), names.end());
    }
    Parser p{text, 0, ctx};
    MultiPoly out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.err("trailing input");
    return out;
}

// ------------------------------------------------- resultant (Bareiss) / gcd

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v) {
    if (f.is_zero() && g.is_zero())
        fail(ErrKind::DegenerateInput, "resultant of two zero polynomials");
    long m = f.degree_in(v), n = g.degree_in(v);
    if (m <= 0 && n <= 0) {
        if (f.is_zero() || g.is_zero())
            fail(ErrKind::DegenerateInput, "resultant with zero input");
        fail(ErrKind::DegenerateInput, "resultant: both inputs constant in " + v);
    }
    auto vars = merge_vars(f.vars(), g.vars());
    auto fc = f.on_vars(vars).coeffs_in(v);
    auto gc = g.on_vars(vars).coeffs_in(v);
    if (m < 0 || n < 0) fail(ErrKind::DegenerateInput, "resultant with zero input");
    // Res(c, g) = c^{deg g} when c is constant in v (and symmetrically).
    if (m == 0) return fc[0].pow(n);
    if (n == 0) return gc[0].pow(m);

    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) M[static_cast<size_t>(r)][static_cast<size_t>(r + j)] =
            fc[static_cast<size_t>(m - j)];
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] =
            gc[static_cast<size_t>(n - j)];

    // Fraction-free Bareiss elimination; divisions are exact by construction.
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(Rational(1), vars);
    for (size_t k = 0; k + 1 < size; ++k) {
        if (M[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < size && M[piv][k].is_zero()) ++piv;
            if (piv == size) return MultiPoly(vars);  // zero resultant
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < size; ++i) {
            for (size_t j = k + 1; j < size; ++j) {
                MultiPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto q = MultiPoly::exact_div(num, prev);
                require_invariant(q.has_value(), "Bareiss division not exact");
                M[i][j] = std::move(*q);
            }
            M[i][k] = MultiPoly(vars);
        }
        prev = M[k][k];
    }
    MultiPoly det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

namespace {

// Pseudo-remainder of f by g in variable v: lc(g)^(df-dg+1) * f mod g.
MultiPoly pseudo_rem(const MultiPoly& f, const MultiPoly& g, const std::string& v) {
    auto vars = merge_vars(f.vars(), g.vars());
    MultiPoly r = f.on_vars(vars);
    MultiPoly d = g.on_vars(vars);
    long dg = d.degree_in(v);
    auto gcoeffs = d.coeffs_in(v);
    MultiPoly lc = gcoeffs[static_cast<size_t>(dg)];
    MultiPoly xv = MultiPoly::var(v, vars);
    while (!r.is_zero() && r.degree_in(v) >= dg) {
        long dr = r.degree_in(v);
        MultiPoly rl = r.coeffs_in(v)[static_cast<size_t>(dr)];
        r = r * lc - d * rl * xv.pow(dr - dg);
    }
    return r;
}

MultiPoly content_in(const MultiPoly& f, const std::string& v);

MultiPoly primitive_in(const MultiPoly& f, const std::string& v) {
    if (f.is_zero()) return f;
    MultiPoly c = content_in(f, v);
    auto q = MultiPoly::exact_div(f, c);
    require_invariant(q.has_value(), "content division not exact");
    return *q;
}

MultiPoly content_in(const MultiPoly& f, const std::string& v) {
    auto cs = f.coeffs_in(v);
    MultiPoly acc(f.vars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c : poly_gcd(acc, c);
        if (acc.is_constant()) break;
    }
    return acc.is_zero() ? MultiPoly::constant(Rational(1), f.vars()) : acc.monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    auto vars = merge_vars(a.vars(), b.vars());
    MultiPoly f = a.on_vars(vars), g = b.on_vars(vars);
    // Main variable: first one actually used by either input.
    std::string main;
    for (const auto& v : vars) {
        if (f.degree_in(v) > 0 || g.degree_in(v) > 0) {
            main = v;
            break;
        }
    }
    if (main.empty()) return MultiPoly::constant(Rational(1), vars);  // both constants

    MultiPoly cf = content_in(f, main), cg = content_in(g, main);
    MultiPoly c = poly_gcd(cf, cg);
    f = primitive_in(f, main);
    g = primitive_in(g, main);
    if (f.degree_in(main) < g.degree_in(main)) std::swap(f, g);
    while (!g.is_zero()) {
        MultiPoly r = pseudo_rem(f, g, main);
        f = std::move(g);
        g = r.is_zero() ? r : primitive_in(r, main);
        if (!g.is_zero() && g.degree_in(main) >= f.degree_in(main))
            require_invariant(false, "PRS degree did not decrease");
    }
    return (c * primitive_in(f, main)).monic();
}

}  // namespace mdr
