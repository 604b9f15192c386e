#include "mdr/factor.hpp"

#include <algorithm>
#include <map>

#include "mdr/bigint.hpp"

namespace mdr {

namespace {

// ----------------------------------------------------- polynomials over F_p

using ModPoly = std::vector<long>;  // coefficients in [0, p)

long norm_mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long mp_deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(r);
    return r;
}

long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = norm_mod(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return norm_mod(t, p);
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, long p) {
    ModPoly r = a, q;
    long db = mp_deg(b);
    require_invariant(db >= 0, "mod-p division by zero");
    long inv = mod_inverse(b.back(), p);
    if (mp_deg(r) >= db) q.assign(static_cast<size_t>(mp_deg(r) - db) + 1, 0);
    while (mp_deg(r) >= db) {
        long d = mp_deg(r);
        long c = r.back() * inv % p;
        q[static_cast<size_t>(d - db)] = c;
        for (long i = 0; i <= db; ++i)
            r[static_cast<size_t>(d - db + i)] =
                norm_mod(r[static_cast<size_t>(d - db + i)] - c * b[static_cast<size_t>(i)], p);
        mp_trim(r);
    }
    return {q, r};
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
    while (!b.empty()) {
        auto r = mp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        long inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mp_powmod(ModPoly base, BigInt e, const ModPoly& m, long p) {
    ModPoly acc{1};
    base = mp_divmod(base, m, p).second;
    while (e.sign() > 0) {
        if ((e % BigInt(2)).is_one()) acc = mp_divmod(mp_mul(acc, base, p), m, p).second;
        base = mp_divmod(mp_mul(base, base, p), m, p).second;
        e = e / BigInt(2);
    }
    return acc;
}

ModPoly mp_derivative(const ModPoly& a, long p) {
    ModPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<long>(i) % p * a[i] % p);
    mp_trim(r);
    return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<ModPoly> berlekamp(const ModPoly& f, long p) {
    long n = mp_deg(f);
    if (n == 1) return {f};
    // Frobenius matrix: column i holds x^{p*i} mod f.
    std::vector<ModPoly> frob(static_cast<size_t>(n));
    ModPoly xp = mp_powmod(ModPoly{0, 1}, BigInt(p), f, p);
    ModPoly cur{1};
    for (long i = 0; i < n; ++i) {
        frob[static_cast<size_t>(i)] = cur;
        cur = mp_divmod(mp_mul(cur, xp, p), f, p).second;
    }
    // Kernel of (Q - I) over F_p.
    std::vector<std::vector<long>> m(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (long j = 0; j < n; ++j) {
        const ModPoly& col = frob[static_cast<size_t>(j)];
        for (long i = 0; i < n; ++i) {
            long v = i < static_cast<long>(col.size()) ? col[static_cast<size_t>(i)] : 0;
            if (i == j) v = norm_mod(v - 1, p);
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    }
    // Gaussian elimination to find kernel basis.
    std::vector<long> pivot_col;
    size_t row = 0;
    for (long col = 0; col < n && row < static_cast<size_t>(n); ++col) {
        size_t sel = row;
        while (sel < static_cast<size_t>(n) && m[sel][static_cast<size_t>(col)] == 0) ++sel;
        if (sel == static_cast<size_t>(n)) continue;
        std::swap(m[row], m[sel]);
        long inv = mod_inverse(m[row][static_cast<size_t>(col)], p);
        for (long j = 0; j < n; ++j) m[row][static_cast<size_t>(j)] =
            m[row][static_cast<size_t>(j)] * inv % p;
        for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
            if (i == row || m[i][static_cast<size_t>(col)] == 0) continue;
            long f2 = m[i][static_cast<size_t>(col)];
            for (long j = 0; j < n; ++j)
                m[i][static_cast<size_t>(j)] =
                    norm_mod(m[i][static_cast<size_t>(j)] - f2 * m[row][static_cast<size_t>(j)], p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<ModPoly> kernel;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (long free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        ModPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(free)] = 1;
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2)
            v[static_cast<size_t>(pivot_col[r2])] = norm_mod(-m[r2][static_cast<size_t>(free)], p);
        mp_trim(v);
        kernel.push_back(std::move(v));
    }
    size_t nfactors = kernel.size();
    if (nfactors == 1) return {f};
    std::vector<ModPoly> factors{f};
    for (const auto& v : kernel) {
        if (factors.size() == nfactors) break;
        if (mp_deg(v) < 1) continue;  // the constant kernel vector splits nothing
        std::vector<ModPoly> next;
        for (auto& u : factors) {
            if (factors.size() + next.size() > nfactors) {
            }
            bool split = false;
            if (mp_deg(u) > 1) {
                for (long c = 0; c < p; ++c) {
                    ModPoly shifted = v;
                    if (shifted.empty()) shifted.push_back(0);
                    shifted[0] = norm_mod(shifted[0] - c, p);
                    mp_trim(shifted);
                    ModPoly g = mp_gcd(u, shifted, p);
                    if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(u)) {
                        next.push_back(g);
                        next.push_back(mp_divmod(u, g, p).first);
                        split = true;
                        break;
                    }
                }
            }
            if (!split) next.push_back(u);
        }
        factors = std::move(next);
    }
    return factors;
}

// -------------------------------------------------- integer polynomial view

using ZPoly = std::vector<BigInt>;

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long zp_deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]).mod_euclid(m);
    }
    zp_trim(r);
    return r;
}

ZPoly zp_reduce(const ZPoly& a, const BigInt& m) {
    ZPoly r = a;
    for (auto& c : r) c = c.mod_euclid(m);
    zp_trim(r);
    return r;
}

ModPoly zp_to_mod(const ZPoly& a, long p) {
    ModPoly r;
    BigInt bp(p);
    for (const auto& c : a) r.push_back(c.mod_euclid(bp).to_long());
    mp_trim(r);
    return r;
}

ZPoly mod_to_zp(const ModPoly& a) {
    ZPoly r;
    for (long c : a) r.push_back(BigInt(c));
    return r;
}

// One linear Hensel step: given monic g,h with f = g*h (mod pk) and Bezout
// data s*g0 + t*h0 = 1 (mod p), produce the factorization mod pk*p.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const ModPoly& t, long p,
                 const BigInt& pk) {
    BigInt pk1 = pk * BigInt(p);
    // e = (f - g*h) / pk   (exact), reduced mod p
    ZPoly gh = zp_mul_mod(g, h, pk1);
    ZPoly e(std::max(f.size(), gh.size()), BigInt(0));
    for (size_t i = 0; i < e.size(); ++i) {
        BigInt d = ((i < f.size() ? f[i] : BigInt(0)) - (i < gh.size() ? gh[i] : BigInt(0)))
                       .mod_euclid(pk1);
        require_invariant((d % pk).is_zero(), "Hensel residual not divisible");
        e[i] = d / pk;
    }
    ModPoly em = zp_to_mod(e, p);
    // u = (e*t) mod g, v = (e - u*h)/g over F_p
    ModPoly gm = zp_to_mod(g, p), hm = zp_to_mod(h, p);
    ModPoly u = mp_divmod(mp_mul(em, t, p), gm, p).second;
    ModPoly uh = mp_mul(u, hm, p);
    ModPoly num(std::max(em.size(), uh.size()), 0);
    for (size_t i = 0; i < num.size(); ++i)
        num[i] = norm_mod((i < em.size() ? em[i] : 0) - (i < uh.size() ? uh[i] : 0), p);
    mp_trim(num);
    auto [v, rem] = mp_divmod(num, gm, p);
    require_invariant(rem.empty(), "Hensel correction division not exact");
    if (g.size() < u.size()) g.resize(u.size(), BigInt(0));
    for (size_t i = 0; i < u.size(); ++i) g[i] = (g[i] + pk * BigInt(u[i])).mod_euclid(pk1);
    if (h.size() < v.size()) h.resize(v.size(), BigInt(0));
    for (size_t i = 0; i < v.size(); ++i) h[i] = (h[i] + pk * BigInt(v[i])).mod_euclid(pk1);
}

// Lifts the factorization f = prod(parts) (mod p), f monic, to mod p^K
// (K = 2^j steps of doubling are not needed; we iterate linearly).
std::vector<ZPoly> hensel_lift_list(const ZPoly& f, const std::vector<ModPoly>& parts, long p,
                                    long steps, const BigInt& ptarget) {
    if (parts.size() == 1) return {zp_reduce(f, ptarget)};
    size_t half = parts.size() / 2;
    ModPoly gm{1}, hm{1};
    for (size_t i = 0; i < half; ++i) gm = mp_mul(gm, parts[i], p);
    for (size_t i = half; i < parts.size(); ++i) hm = mp_mul(hm, parts[i], p);
    // Bezout cofactor t with s*gm + t*hm = 1 (mod p); the lifting step only
    // needs t.
    ModPoly t;
    {
        ModPoly r0 = gm, r1 = hm, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = mp_divmod(r0, r1, p);
            r0 = std::move(r1);
            r1 = std::move(r);
            ModPoly t2 = t0;
            ModPoly qt = mp_mul(q, t1, p);
            t2.resize(std::max(t2.size(), qt.size()), 0);
            for (size_t i = 0; i < qt.size(); ++i) t2[i] = norm_mod(t2[i] - qt[i], p);
            mp_trim(t2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        require_invariant(mp_deg(r0) == 0, "lift pair not coprime");
        long inv = mod_inverse(r0[0], p);
        for (auto& c : t0) c = c * inv % p;
        t = t0;
    }
    ZPoly g = mod_to_zp(gm), h = mod_to_zp(hm);
    BigInt pk(p);
    for (long i = 1; i < steps; ++i) {
        hensel_step(zp_reduce(f, pk * BigInt(p)), g, h, t, p, pk);
        pk = pk * BigInt(p);
    }
    std::vector<ModPoly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<ModPoly> right(parts.begin() + static_cast<long>(half), parts.end());
    auto lg = hensel_lift_list(g, left, p, steps, ptarget);
    auto lh = hensel_lift_list(h, right, p, steps, ptarget);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

BigInt centered(const BigInt& a, const BigInt& m) {
    BigInt r = a.mod_euclid(m);
    if (r * BigInt(2) > m) r = r - m;
    return r;
}

UniPoly<Rational> zp_to_unipoly(const ZPoly& a) {
    std::vector<Rational> c;
    for (const auto& x : a) c.emplace_back(x);
    return UniPoly<Rational>(std::move(c));
}

// Integer content-free version of a rational polynomial with positive lc.
ZPoly to_integer_primitive(const UniPoly<Rational>& f, BigInt* lc_out) {
    BigInt den(1);
    for (const auto& c : f.coeffs()) den = lcm(den, c.den());
    ZPoly z;
    BigInt content(0);
    for (const auto& c : f.coeffs()) {
        BigInt v = c.num() * (den / c.den());
        content = gcd(content, v);
        z.push_back(std::move(v));
    }
    if (!content.is_zero())
        for (auto& v : z) v = v / content;
    if (!z.empty() && z.back().sign() < 0)
        for (auto& v : z) v = -v;
    if (lc_out) *lc_out = z.empty() ? BigInt(0) : z.back();
    return z;
}

// Zassenhaus: factor a monic squarefree rational polynomial of degree >= 2.
std::vector<UniPoly<Rational>> factor_squarefree_q(const UniPoly<Rational>& fin) {
    std::vector<UniPoly<Rational>> out;
    UniPoly<Rational> f = fin.monic();
    // Rational root extraction first (also the deg<=3 irreducibility test).
    {
        BigInt lc(1);
        ZPoly z = to_integer_primitive(f, &lc);
        BigInt c0 = z.empty() ? BigInt(0) : z[0];
        if (c0.is_zero()) {
            out.push_back(UniPoly<Rational>::x());
            std::vector<Rational> rest(z.size() - 1);
            for (size_t i = 1; i < z.size(); ++i) rest[i - 1] = Rational(z[i]);
            auto deeper = UniPoly<Rational>(std::move(rest));
            if (deeper.degree() >= 1) {
                auto sub = deeper.degree() == 1
                               ? std::vector<UniPoly<Rational>>{deeper.monic()}
                               : factor_squarefree_q(deeper);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
    }
    if (f.degree() == 1) return {f};

    BigInt lc(1);
    ZPoly F = to_integer_primitive(f, &lc);
    long n = zp_deg(F);

    // Choose a prime keeping F squarefree with unchanged degree.
    long p = 3;
    std::vector<ModPoly> parts;
    for (;; p = BigInt(p).next_prime().to_long()) {
        if (p > 104729) fail(ErrKind::InvariantViolation, "no usable prime for factorization");
        if ((lc.mod_euclid(BigInt(p))).is_zero()) continue;
        ModPoly fm = zp_to_mod(F, p);
        if (mp_deg(fm) != n) continue;
        ModPoly d = mp_derivative(fm, p);
        if (mp_deg(mp_gcd(fm, d, p)) != 0) continue;
        // Monicize mod p.
        long inv = mod_inverse(fm.back(), p);
        for (auto& c : fm) c = c * inv % p;
        parts = berlekamp(fm, p);
        break;
    }
    if (parts.size() == 1) return {f};

    // Coefficient bound: factors of lc*F have coefficients below
    // 2^n * |lc| * l2norm(F); lift past twice that.
    BigInt norm2(0);
    for (const auto& c : F) norm2 = norm2 + c * c;
    BigInt bound = (norm2.isqrt() + BigInt(1)) * lc.abs() * BigInt(2).pow(static_cast<unsigned long>(n + 1));
    long steps = 1;
    BigInt pK(p);
    while (pK <= bound * BigInt(2)) {
        pK = pK * BigInt(p);
        ++steps;
    }

    // Lift the monic factorization of F/lc.
    BigInt lcinv = lc.invert_mod(pK).first;
    ZPoly Fmonic(F.size());
    for (size_t i = 0; i < F.size(); ++i) Fmonic[i] = (F[i] * lcinv).mod_euclid(pK);
    std::sort(parts.begin(), parts.end(),
              [](const ModPoly& a, const ModPoly& b) { return a.size() < b.size(); });
    std::vector<ZPoly> lifted = hensel_lift_list(Fmonic, parts, p, steps, pK);

    // Subset recombination with trial division.
    std::vector<bool> used(lifted.size(), false);
    UniPoly<Rational> rem = f;
    size_t active = lifted.size();
    for (size_t take = 1; take <= active && active > 0; ++take) {
        bool again = true;
        while (again) {
            again = false;
            std::vector<size_t> avail;
            for (size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) avail.push_back(i);
            if (take > avail.size()) break;
            std::vector<size_t> idx(take);
            for (size_t i = 0; i < take; ++i) idx[i] = i;
            while (true) {
                ZPoly cand{lc.mod_euclid(pK)};
                for (size_t i = 0; i < take; ++i) cand = zp_mul_mod(cand, lifted[avail[idx[i]]], pK);
                for (auto& c : cand) c = centered(c, pK);
                BigInt content(0);
                for (const auto& c : cand) content = gcd(content, c);
                if (!content.is_zero())
                    for (auto& c : cand) c = c / content;
                UniPoly<Rational> h = zp_to_unipoly(cand);
                if (h.degree() >= 1) {
                    auto [q, r] = UniPoly<Rational>::divmod(rem, h.monic());
                    if (r.is_zero()) {
                        out.push_back(h.monic());
                        rem = q;
                        for (size_t i = 0; i < take; ++i) used[avail[idx[i]]] = true;
                        active -= take;
                        again = true;
                        break;
                    }
                }
                // next combination
                long pos = static_cast<long>(take) - 1;
                while (pos >= 0 && idx[static_cast<size_t>(pos)] ==
                                       avail.size() - take + static_cast<size_t>(pos))
                    --pos;
                if (pos < 0) break;
                ++idx[static_cast<size_t>(pos)];
                for (size_t i = static_cast<size_t>(pos) + 1; i < take; ++i)
                    idx[i] = idx[i - 1] + 1;
            }
        }
    }
    if (rem.degree() >= 1) out.push_back(rem.monic());
    return out;
}

}  // namespace

std::vector<FactorPart<Rational>> factor_over_q(const UniPoly<Rational>& f) {
    if (f.is_zero()) fail(ErrKind::DegenerateInput, "factorization of zero polynomial");
    std::vector<FactorPart<Rational>> out;
    for (const auto& [sqf, mult] : squarefree_decomposition(f)) {
        for (auto& irr : factor_squarefree_q(sqf)) out.push_back({irr, mult});
    }
    std::sort(out.begin(), out.end(), [](const FactorPart<Rational>& a, const FactorPart<Rational>& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.str() < b.factor.str();
    });
    return out;
}

bool is_irreducible_over_q(const UniPoly<Rational>& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto parts = factor_over_q(f);
    return parts.size() == 1 && parts[0].mult == 1;
}

// ------------------------------------------------------------- over Q(s)

namespace {

// Polynomials over Q[t]/(t^K), represented as UniPoly in u with truncated
// UniPoly<Rational> coefficients in t.
struct SeriesPoly {
    std::vector<UniPoly<Rational>> c;  // coefficient of u^i
    long K;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    long deg() const { return static_cast<long>(c.size()) - 1; }
};

UniPoly<Rational> series_trunc(const UniPoly<Rational>& a, long K) {
    std::vector<Rational> v;
    for (long i = 0; i < K && i <= a.degree(); ++i) v.push_back(a[static_cast<size_t>(i)]);
    return UniPoly<Rational>(std::move(v));
}

SeriesPoly sp_mul(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly r{{}, a.K};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, UniPoly<Rational>());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += series_trunc(a.c[i] * b.c[j], a.K);
    for (auto& x : r.c) x = series_trunc(x, a.K);
    r.trim();
    return r;
}

SeriesPoly sp_sub(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly r = a;
    r.c.resize(std::max(a.c.size(), b.c.size()), UniPoly<Rational>());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = series_trunc(r.c[i] - b.c[i], a.K);
    r.trim();
    return r;
}

// Power series inverse of a unit (nonzero constant term) mod t^K.
UniPoly<Rational> series_inverse(const UniPoly<Rational>& a, long K) {
    require_invariant(!a.is_zero() && !a[0].is_zero(), "series inverse of non-unit");
    std::vector<Rational> inv(static_cast<size_t>(K), Rational(0));
    inv[0] = Rational(1) / a[0];
    for (long k = 1; k < K; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i)
            acc += a[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
        inv[static_cast<size_t>(k)] = -acc / a[0];
    }
    return UniPoly<Rational>(std::move(inv));
}

}  // namespace

UniPoly<RationalFunction> as_unipoly_over_field(const MultiPoly& p, const std::string& main) {
    auto cs = p.coeffs_in(main);
    std::vector<RationalFunction> coeffs;
    for (auto& c : cs) coeffs.emplace_back(c);
    return UniPoly<RationalFunction>(std::move(coeffs));
}

MultiPoly from_unipoly_over_field(const UniPoly<RationalFunction>& p, const std::string& main,
                                  const std::vector<std::string>& vars) {
    MultiPoly acc(vars);
    MultiPoly x = MultiPoly::var(main, vars);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        const RationalFunction& c = p[i];
        if (!c.is_polynomial())
            fail(ErrKind::Precondition, "coefficient has a denominator: " + c.str());
        acc = acc * x + c.num().on_vars(vars);
    }
    return acc;
}

std::vector<FactorPart<RationalFunction>> factor_over_qs(const UniPoly<RationalFunction>& f,
                                                         const std::string& param) {
    if (f.is_zero()) fail(ErrKind::DegenerateInput, "factorization of zero polynomial");
    std::vector<FactorPart<RationalFunction>> out;
    const std::string u = "__u";
    for (const auto& [sqf, mult] : squarefree_decomposition(f)) {
        if (sqf.degree() == 1) {
            out.push_back({sqf, mult});
            continue;
        }
        // Clear denominators into Q[param][u], primitive in u.
        MultiPoly den = MultiPoly::constant(Rational(1), {param});
        for (const auto& c : sqf.coeffs()) den = (RationalFunction(den) * RationalFunction(c.den())).num();
        std::vector<std::string> vars{u, param};
        MultiPoly biv(vars);
        MultiPoly xu = MultiPoly::var(u, vars);
        for (size_t i = sqf.coeffs().size(); i-- > 0;) {
            RationalFunction c = sqf[i] * RationalFunction(den);
            require_invariant(c.is_polynomial(), "denominator clearing failed");
            biv = biv * xu + c.num().on_vars(vars);
        }
        // Primitive part with respect to u.
        {
            auto cs = biv.coeffs_in(u);
            MultiPoly cont(vars);
            for (const auto& c : cs)
                if (!c.is_zero()) cont = cont.is_zero() ? c : poly_gcd(cont, c);
            biv = *MultiPoly::exact_div(biv, cont);
        }
        long du = biv.degree_in(u);
        if (du == 1) {
            out.push_back({sqf.monic(), mult});
            continue;
        }
        long ds = std::max(biv.degree_in(param), 0L);
        long K = 2 * ds + 2;

        // Find a good specialization point.
        auto ucoeffs = biv.coeffs_in(u);
        MultiPoly lc_u = ucoeffs[static_cast<size_t>(du)];
        Rational s0;
        UniPoly<Rational> spec;
        bool found = false;
        for (long trial = 0; trial < 200 && !found; ++trial) {
            long v = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1);
            std::map<std::string, Rational> pt{{param, Rational(v)}};
            if (lc_u.eval(pt).is_zero()) continue;
            std::vector<Rational> cs;
            for (const auto& c : ucoeffs) cs.push_back(c.eval(pt));
            UniPoly<Rational> sp(std::move(cs));
            if (upoly_gcd(sp, sp.derivative()).degree() != 0) continue;
            s0 = Rational(v);
            spec = sp;
            found = true;
        }
        require_invariant(found, "no good specialization point found");

        // Shift param -> param + s0 so we lift at t = 0.
        std::vector<std::string> pv{param};
        MultiPoly shift = MultiPoly::var(param, pv) + MultiPoly::constant(s0, pv);
        MultiPoly shifted = biv.substitute(param, shift);

        auto qfactors = factor_squarefree_q(spec);
        if (qfactors.size() == 1) {
            out.push_back({sqf.monic(), mult});
            continue;
        }

        // Monicize mod t^K and lift the specialized factorization t-adically.
        auto shifted_cs = shifted.coeffs_in(u);
        auto to_series = [&](const MultiPoly& c) {
            std::vector<Rational> v;
            auto tc = c.coeffs_in(param);
            for (const auto& t : tc) v.push_back(t.constant_value());
            return series_trunc(UniPoly<Rational>(std::move(v)), K);
        };
        SeriesPoly F{{}, K};
        for (const auto& c : shifted_cs) F.c.push_back(to_series(c));
        F.trim();
        UniPoly<Rational> lcinv = series_inverse(F.c.back(), K);
        SeriesPoly Fm = F;
        for (auto& c : Fm.c) c = series_trunc(c * lcinv, K);

        // Recursive pairwise lifting over Q[[t]].
        struct Lifter {
            long K;
            std::vector<SeriesPoly> operator()(const SeriesPoly& target,
                                               const std::vector<UniPoly<Rational>>& parts) {
                if (parts.size() == 1) return {target};
                size_t half = parts.size() / 2;
                UniPoly<Rational> g0 = UniPoly<Rational>::constant(Rational(1));
                UniPoly<Rational> h0 = g0;
                for (size_t i = 0; i < half; ++i) g0 = g0 * parts[i];
                for (size_t i = half; i < parts.size(); ++i) h0 = h0 * parts[i];
                auto [one, s, t] = upoly_xgcd(g0, h0);
                require_invariant(one.degree() == 0, "specialized factors not coprime");
                // g,h as series polys, lift t-adic degree by degree.
                SeriesPoly g = embed(g0), h = embed(h0);
                for (long m = 1; m < K; ++m) {
                    SeriesPoly gh = sp_mul(g, h);
                    SeriesPoly e = sp_sub(target, gh);
                    // e has valuation >= m in t; extract t^m layer as UniPoly in u.
                    std::vector<Rational> layer;
                    for (const auto& c : e.c) layer.push_back(c[static_cast<size_t>(m)]);
                    UniPoly<Rational> em(std::move(layer));
                    if (em.is_zero()) continue;
                    UniPoly<Rational> uq = (em * t) % g0;
                    UniPoly<Rational> vq = (em - uq * h0) / g0;
                    add_layer(g, uq, m);
                    add_layer(h, vq, m);
                }
                std::vector<UniPoly<Rational>> left(parts.begin(), parts.begin() + static_cast<long>(half));
                std::vector<UniPoly<Rational>> right(parts.begin() + static_cast<long>(half), parts.end());
                auto lg = (*this)(g, left);
                auto lh = (*this)(h, right);
                lg.insert(lg.end(), lh.begin(), lh.end());
                return lg;
            }
            SeriesPoly embed(const UniPoly<Rational>& q) {
                SeriesPoly r{{}, K};
                for (const auto& c : q.coeffs()) r.c.push_back(UniPoly<Rational>::constant(c));
                r.trim();
                return r;
            }
            void add_layer(SeriesPoly& g, const UniPoly<Rational>& u, long m) {
                if (g.c.size() < static_cast<size_t>(u.degree() + 1))
                    g.c.resize(static_cast<size_t>(u.degree() + 1));
                for (long i = 0; i <= u.degree(); ++i)
                    g.c[static_cast<size_t>(i)] +=
                        UniPoly<Rational>::monomial(u[static_cast<size_t>(i)], static_cast<size_t>(m));
                g.trim();
            }
        };
        std::vector<SeriesPoly> lifted = Lifter{K}(Fm, qfactors);

        // Recombination: multiply subsets by lc, clear t-content, un-shift,
        // trial divide over Q(param).
        UniPoly<RationalFunction> remf = sqf.monic();
        std::vector<bool> used(lifted.size(), false);
        size_t active = lifted.size();
        std::vector<UniPoly<RationalFunction>> irr;
        MultiPoly back_shift =
            MultiPoly::var(param, pv) - MultiPoly::constant(s0, pv);
        auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
            SeriesPoly cand{{UniPoly<Rational>::constant(Rational(1))}, K};
            for (size_t i : subset) cand = sp_mul(cand, lifted[i]);
            // multiply by lc_u (as series)
            SeriesPoly lcs{{to_series(shifted.coeffs_in(u)[static_cast<size_t>(du)])}, K};
            cand = sp_mul(cand, lcs);
            // to MultiPoly in (u, param), un-shift
            MultiPoly mp(vars);
            MultiPoly xu2 = MultiPoly::var(u, vars);
            MultiPoly xs = MultiPoly::var(param, vars);
            for (size_t i = cand.c.size(); i-- > 0;) {
                MultiPoly layer(vars);
                const auto& ser = cand.c[i];
                for (long j = 0; j <= ser.degree(); ++j)
                    layer += MultiPoly::constant(ser[static_cast<size_t>(j)], vars) * xs.pow(j);
                mp = mp * xu2 + layer;
            }
            mp = mp.substitute(param, back_shift.on_vars(vars));
            if (mp.is_zero()) return false;
            // primitive in u
            auto cs2 = mp.coeffs_in(u);
            MultiPoly cont(vars);
            for (const auto& c : cs2)
                if (!c.is_zero()) cont = cont.is_zero() ? c : poly_gcd(cont, c);
            if (cont.is_zero()) return false;
            mp = *MultiPoly::exact_div(mp, cont);
            auto h = as_unipoly_over_field(mp, u).monic();
            if (h.degree() < 1) return false;
            auto [q, r] = UniPoly<RationalFunction>::divmod(remf, h);
            if (!r.is_zero()) return false;
            irr.push_back(h);
            remf = q;
            return true;
        };
        for (size_t take = 1; take <= active && active > 0 && remf.degree() > 0; ++take) {
            bool again = true;
            while (again && remf.degree() > 0) {
                again = false;
                std::vector<size_t> avail;
                for (size_t i = 0; i < lifted.size(); ++i)
                    if (!used[i]) avail.push_back(i);
                if (take > avail.size()) break;
                std::vector<size_t> idx(take);
                for (size_t i = 0; i < take; ++i) idx[i] = i;
                while (true) {
                    std::vector<size_t> subset;
                    for (size_t i = 0; i < take; ++i) subset.push_back(avail[idx[i]]);
                    if (try_subset(subset)) {
                        for (size_t i : subset) used[i] = true;
                        active -= take;
                        again = true;
                        break;
                    }
                    long pos = static_cast<long>(take) - 1;
                    while (pos >= 0 && idx[static_cast<size_t>(pos)] ==
                                           avail.size() - take + static_cast<size_t>(pos))
                        --pos;
                    if (pos < 0) break;
                    ++idx[static_cast<size_t>(pos)];
                    for (size_t i = static_cast<size_t>(pos) + 1; i < take; ++i)
                        idx[i] = idx[i - 1] + 1;
                }
            }
        }
        if (remf.degree() >= 1) irr.push_back(remf.monic());
        for (auto& h : irr) out.push_back({h, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const FactorPart<RationalFunction>& a, const FactorPart<RationalFunction>& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  return a.factor.str() < b.factor.str();
              });
    return out;
}

std::vector<std::pair<MultiPoly, long>> factor_multipoly_in(const MultiPoly& f,
                                                            const std::string& v) {
    if (f.is_zero()) fail(ErrKind::DegenerateInput, "factorization of zero polynomial");
    std::vector<Rational> cs;
    for (const auto& c : f.coeffs_in(v)) {
        if (!c.is_constant())
            fail(ErrKind::Precondition, "polynomial is not univariate in " + v);
        cs.push_back(c.constant_value());
    }
    UniPoly<Rational> u(std::move(cs));
    std::vector<std::pair<MultiPoly, long>> out;
    for (const auto& part : factor_over_q(u)) {
        MultiPoly p(std::vector<std::string>{v});
        MultiPoly x = MultiPoly::var(v, {v});
        for (size_t i = part.factor.coeffs().size(); i-- > 0;)
            p = p * x + MultiPoly::constant(part.factor[i], {v});
        out.emplace_back(std::move(p), part.mult);
    }
    return out;
}

}  // namespace mdr
