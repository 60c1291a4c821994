#include <hypermatch/poly.hpp>

#include <hypermatch/errors.hpp>

#include <algorithm>
#include <sstream>

namespace hypermatch {

SignedPolynomial SignedPolynomial::monomial(long exp, Int coef) {
    SignedPolynomial p;
    if (coef != 0) p.terms_[exp] = std::move(coef);
    return p;
}

void SignedPolynomial::add_term(long exp, const Int& coef) {
    if (coef == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

long SignedPolynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

Int SignedPolynomial::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

SignedPolynomial SignedPolynomial::operator+(const SignedPolynomial& o) const {
    SignedPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SignedPolynomial SignedPolynomial::operator-(const SignedPolynomial& o) const {
    SignedPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SignedPolynomial SignedPolynomial::operator*(const SignedPolynomial& o) const {
    SignedPolynomial r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Rat SignedPolynomial::eval(const Rat& x) const {
    // Horner over the sparse exponent gaps.
    Rat acc = 0;
    long prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0) {
            long gap = prev - it->first;
            for (long i = 0; i < gap; ++i) acc *= x;
        }
        acc += Rat(it->second);
        prev = it->first;
    }
    if (prev > 0)
        for (long i = 0; i < prev; ++i) acc *= x;
    return acc;
}

std::string SignedPolynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || it->first == 0) out << a.get_str();
        if (it->first > 0) {
            out << var;
            if (it->first > 1) out << "^" << it->first;
        }
        first = false;
    }
    return out.str();
}

SignedPolynomial poly_product(const SignedPolynomial& a, const SignedPolynomial& b) {
    return a * b;
}

QPoly QPoly::from_signed(const SignedPolynomial& p) {
    QPoly q;
    if (p.is_zero()) return q;
    q.c.assign(p.degree() + 1, Rat(0));
    for (const auto& [e, coef] : p.terms()) q.c[e] = Rat(coef);
    return q;
}

QPoly QPoly::from_int_coeffs_desc(const std::vector<Int>& desc) {
    QPoly q;
    q.c.assign(desc.size(), Rat(0));
    for (size_t i = 0; i < desc.size(); ++i)
        q.c[desc.size() - 1 - i] = Rat(desc[i]);
    q.trim();
    return q;
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int QPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

QPoly QPoly::derivative() const {
    QPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<long>(i);
    d.trim();
    return d;
}

QPoly QPoly::monic() const {
    QPoly r = *this;
    if (r.is_zero()) return r;
    Rat l = r.lead();
    for (auto& x : r.c) x /= l;
    return r;
}

QPoly QPoly::neg() const {
    QPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

QPoly QPoly::rem(const QPoly& d) const {
    if (d.is_zero()) throw BadParams("division by zero polynomial");
    QPoly r = *this;
    r.trim();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat f = r.lead() / d.lead();
        int shift = r.degree() - d.degree();
        for (int i = 0; i <= d.degree(); ++i) r.c[i + shift] -= f * d.c[i];
        r.c.pop_back();
        r.trim();
    }
    return r;
}

QPoly QPoly::divexact(const QPoly& d) const {
    if (d.is_zero()) throw BadParams("division by zero polynomial");
    QPoly r = *this;
    r.trim();
    QPoly q;
    if (r.degree() < d.degree()) {
        if (!r.is_zero()) throw BadParams("divexact: not divisible");
        return q;
    }
    q.c.assign(r.degree() - d.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat f = r.lead() / d.lead();
        int shift = r.degree() - d.degree();
        q.c[shift] = f;
        for (int i = 0; i <= d.degree(); ++i) r.c[i + shift] -= f * d.c[i];
        r.trim();
    }
    if (!r.is_zero()) throw BadParams("divexact: not divisible");
    q.trim();
    return q;
}

QPoly QPoly::deflate(const Rat& r) const {
    if (c.size() < 2) throw BadParams("deflate on constant");
    QPoly q;
    q.c.assign(c.size() - 1, Rat(0));
    Rat carry = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        q.c[i] = carry;
        carry = c[i] + carry * r;
    }
    if (carry != 0) throw BadParams("deflate: point is not a root");
    q.trim();
    return q;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        QPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic(); // keeps coefficient growth bounded
    }
    return a.is_zero() ? a : a.monic();
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    QPoly g = qpoly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return p.divexact(g).monic();
}

Rat cauchy_bound(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(1);
    Rat mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = abs(p.c[i] / p.lead());
        if (a > mx) mx = a;
    }
    return mx + 1;
}

SturmChain::SturmChain(const QPoly& squarefree) {
    QPoly p0 = squarefree;
    p0.trim();
    if (p0.is_zero()) throw BadParams("Sturm chain of zero polynomial");
    seq.push_back(p0);
    if (p0.degree() == 0) return;
    seq.push_back(p0.derivative());
    while (seq.back().degree() > 0) {
        QPoly r = seq[seq.size() - 2].rem(seq.back()).neg();
        r.trim();
        if (r.is_zero()) break; // only for non-squarefree input
        seq.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_at_inf(int dir) const {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        if (p.is_zero()) continue;
        int s = sgn(p.lead());
        if (dir < 0 && (p.degree() % 2 == 1)) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    if (!(a < b)) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_above(const Rat& a) const {
    return variations_at(a) - variations_at_inf(+1);
}

int SturmChain::count_roots_all() const {
    return variations_at_inf(-1) - variations_at_inf(+1);
}

namespace {

void isolate_rec(const QPoly& p, const SturmChain& chain, const Rat& a,
                 const Rat& b, int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(RootInterval{a, b});
        return;
    }
    Rat mid = (a + b) / 2;
    if (p.sign_at(mid) == 0) {
        // Rational root exactly at the midpoint: record the point, then
        // recurse on a deflated polynomial to keep endpoints off roots.
        QPoly q = p.deflate(mid);
        QPoly qsf = squarefree_part(q);
        SturmChain sub(qsf);
        int left = sub.count_roots(a, mid);
        int right = sub.count_roots(mid, b);
        isolate_rec(qsf, sub, a, mid, left, out);
        out.push_back(RootInterval{mid, mid});
        isolate_rec(qsf, sub, mid, b, right, out);
        return;
    }
    int left = chain.count_roots(a, mid);
    isolate_rec(p, chain, a, mid, left, out);
    isolate_rec(p, chain, mid, b, count - left, out);
}

} // namespace

namespace {

// The deflation path can hand back intervals whose endpoint is a rational
// root of the original polynomial (the deflated one, not the isolated
// root). The isolated root is strictly interior, so symmetric inward
// probes eventually straddle it with nonzero endpoint signs.
void normalize_endpoints(RootInterval& ri, const QPoly& p) {
    if (ri.exact()) return;
    if (p.sign_at(ri.lo) != 0 && p.sign_at(ri.hi) != 0) return;
    Rat width = ri.hi - ri.lo;
    for (int j = 2;; ++j) {
        Rat delta = width / Rat(Int(1) << j);
        Rat t = ri.lo + delta;
        Rat u = ri.hi - delta;
        int st = p.sign_at(t);
        if (st == 0) {
            ri.lo = ri.hi = t;
            return;
        }
        int su = p.sign_at(u);
        if (su == 0) {
            ri.lo = ri.hi = u;
            return;
        }
        if (st != su) {
            ri.lo = t;
            ri.hi = u;
            return;
        }
    }
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const QPoly& squarefree) {
    std::vector<RootInterval> out;
    QPoly p = squarefree;
    p.trim();
    if (p.is_zero() || p.degree() == 0) return out;
    Rat bound = cauchy_bound(p);
    SturmChain chain(p);
    int total = chain.count_roots(-bound, bound);
    isolate_rec(p, chain, -bound, bound, total, out);
    for (auto& ri : out) normalize_endpoints(ri, p);
    // Shrink until intervals are pairwise disjoint with rational gaps.
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].hi >= out[i + 1].lo) {
            auto shrink = [&](RootInterval& ri) {
                if (ri.exact()) return;
                Rat mid = (ri.lo + ri.hi) / 2;
                int s = p.sign_at(mid);
                if (s == 0) {
                    ri.lo = ri.hi = mid;
                } else if (s == p.sign_at(ri.lo)) {
                    ri.lo = mid;
                } else {
                    ri.hi = mid;
                }
            };
            shrink(out[i]);
            shrink(out[i + 1]);
            if (out[i].exact() && out[i + 1].exact()) break;
        }
    }
    return out;
}

int real_roots_with_multiplicity(const QPoly& p) {
    QPoly cur = p;
    cur.trim();
    int total = 0;
    while (!cur.is_zero() && cur.degree() > 0) {
        QPoly sf = squarefree_part(cur);
        SturmChain chain(sf);
        total += chain.count_roots_all();
        QPoly g = qpoly_gcd(cur, cur.derivative());
        if (g.degree() <= 0) break;
        cur = g;
    }
    return total;
}

std::string rat_to_string(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

void kth_root_bounds(const Rat& y, int k, const Rat& eps, Rat& l, Rat& u) {
    if (y < 0) throw BadParams("kth_root_bounds: negative radicand");
    if (k < 1) throw BadParams("kth_root_bounds: k < 1");
    if (y == 0) {
        l = u = 0;
        return;
    }
    // Scale so that 1/S <= eps, take the integer k-th root of floor(y * S^k).
    Int S = 1;
    Rat inv = 1;
    while (inv > eps) {
        S *= 2;
        inv = Rat(1) / Rat(S);
    }
    Int num = y.get_num(), den = y.get_den();
    Int scaled;
    mpz_pow_ui(scaled.get_mpz_t(), S.get_mpz_t(), static_cast<unsigned long>(k));
    scaled *= num;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    Int r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    l = Rat(r) / Rat(S);
    u = Rat(r + 1) / Rat(S);
    // r^k <= floor(y S^k) gives l <= y^(1/k); (r+1)^k >= floor(y S^k) + 1
    // gives u > y^(1/k) unless l is already the exact rational root.
    Rat lk = l;
    for (int i = 1; i < k; ++i) lk *= l;
    if (lk == y) u = l;
    l.canonicalize();
    u.canonicalize();
}

} // namespace hypermatch
