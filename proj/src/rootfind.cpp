#include <hypermatch/rootfind.hpp>

#include <algorithm>
#include <cassert>

namespace hypermatch {

ReducedPoly reduce_spectrum(const MatchingSpectrum& s) {
    ReducedPoly rp;
    rp.k = s.k;
    int M = s.max_matching();
    rp.coeffs_desc.resize(M + 1);
    for (int r = 0; r <= M; ++r)
        rp.coeffs_desc[r] = (r % 2 == 0) ? s.counts[r] : -s.counts[r];
    rp.shift = s.n - static_cast<long>(s.k) * M;
    return rp;
}

void AlgebraicReal::refine() {
    if (exact()) return;
    refine_at((lo + hi) / 2);
}

void AlgebraicReal::refine_at(const Rat& t) {
    if (exact()) return;
    if (!(lo < t && t < hi)) return;
    int s = p.sign_at(t);
    if (s == 0) {
        lo = hi = t;
    } else if (s == p.sign_at(lo)) {
        lo = t;
    } else {
        hi = t;
    }
}

void AlgebraicReal::refine_to(const Rat& eps) {
    while (!exact() && width() > eps) refine();
}

double AlgebraicReal::approx() const {
    Rat mid = (lo + hi) / 2;
    return mid.get_d();
}

int sign_at_algebraic(const QPoly& d_in, AlgebraicReal a) {
    QPoly d = d_in;
    d.trim();
    if (d.is_zero()) return 0;
    if (a.exact()) return d.sign_at(a.lo);

    QPoly dsf = squarefree_part(d);
    QPoly g = qpoly_gcd(a.p, dsf);
    if (g.degree() >= 1) {
        // Any root of g inside the isolating interval must be the unique
        // root of a.p there, i.e. the number itself.
        SturmChain gs(g);
        if (gs.count_roots(a.lo, a.hi) >= 1) return 0;
    }
    SturmChain ds(dsf);
    while (!a.exact()) {
        bool lo_bad = dsf.sign_at(a.lo) == 0;
        bool hi_bad = dsf.sign_at(a.hi) == 0;
        if (!lo_bad && !hi_bad && ds.count_roots(a.lo, a.hi) == 0)
            return d.sign_at(a.lo);
        // Split off-center when an endpoint sits exactly on a root of d.
        Rat t = lo_bad   ? Rat(a.lo + (a.hi - a.lo) / 3)
                : hi_bad ? Rat(a.lo + (a.hi - a.lo) * 2 / 3)
                         : Rat((a.lo + a.hi) / 2);
        a.refine_at(t);
    }
    return d.sign_at(a.lo);
}

int count_roots_above_algebraic(const QPoly& d_in, AlgebraicReal a,
                                Rat* safe_above) {
    QPoly d = d_in;
    d.trim();
    if (d.is_zero()) throw BadParams("root count of zero polynomial");
    QPoly dsf = squarefree_part(d);

    if (a.exact()) {
        Rat r = a.lo;
        while (!dsf.is_zero() && dsf.degree() >= 1 && dsf.sign_at(r) == 0)
            dsf = dsf.deflate(r);
        if (dsf.degree() < 1) {
            if (safe_above) *safe_above = r + 1;
            return 0;
        }
        SturmChain ds(dsf);
        if (safe_above) {
            // walk right until the next root is strictly beyond
            Rat step(1, 16);
            Rat t = r + step;
            while (dsf.sign_at(t) == 0 || ds.count_roots(r, t) > 0) {
                step /= 2;
                t = r + step;
            }
            *safe_above = t;
        }
        return ds.count_roots_above(r);
    }

    int s0 = sign_at_algebraic(d, a);
    int expected_inside = (s0 == 0) ? 1 : 0;
    SturmChain ds(dsf);
    while (true) {
        bool lo_bad = dsf.sign_at(a.lo) == 0;
        bool hi_bad = dsf.sign_at(a.hi) == 0;
        if (!a.exact() && !lo_bad && !hi_bad &&
            ds.count_roots(a.lo, a.hi) == expected_inside)
            break;
        if (a.exact())
            return count_roots_above_algebraic(d, a, safe_above);
        Rat t = lo_bad   ? Rat(a.lo + (a.hi - a.lo) / 3)
                : hi_bad ? Rat(a.lo + (a.hi - a.lo) * 2 / 3)
                         : Rat((a.lo + a.hi) / 2);
        a.refine_at(t);
    }
    if (safe_above) *safe_above = a.hi;
    return ds.count_roots_above(a.hi);
}

namespace {

// Isolates the largest real root of a squarefree polynomial. Whenever the
// bisection point lands exactly on a root, that root is deflated away so
// Sturm queries keep rational non-root endpoints.
void isolate_largest(const QPoly& qsf, const Rat& eps, Rat& out_lo, Rat& out_hi) {
    QPoly cur = qsf;
    Rat bound = cauchy_bound(cur);
    Rat a = -bound, b = bound;
    SturmChain ch(cur);
    int inside = ch.count_roots(a, b);
    if (inside < 1) throw BadParams("polynomial has no real root");

    while (true) {
        if (inside == 1 && b - a <= eps) {
            // q is monic with integer coefficients, so any rational root is
            // an integer; snap when the interval brackets one.
            Int ia, ib;
            mpz_cdiv_q(ia.get_mpz_t(), a.get_num().get_mpz_t(),
                       a.get_den().get_mpz_t());
            mpz_fdiv_q(ib.get_mpz_t(), b.get_num().get_mpz_t(),
                       b.get_den().get_mpz_t());
            for (Int c = ia; c <= ib; ++c) {
                if (cur.sign_at(Rat(c)) == 0) {
                    out_lo = out_hi = Rat(c);
                    return;
                }
            }
            out_lo = a;
            out_hi = b;
            return;
        }
        Rat mid = (a + b) / 2;
        if (cur.sign_at(mid) == 0) {
            QPoly defl = cur.deflate(mid);
            defl.trim();
            bool roots_beyond = false;
            if (defl.degree() >= 1) {
                SturmChain dch(defl);
                roots_beyond = dch.count_roots(mid, b) > 0;
            }
            if (!roots_beyond) {
                out_lo = out_hi = mid;
                return;
            }
            cur = defl.monic();
            ch = SturmChain(cur);
            // Advance the left endpoint strictly past the deflated root.
            Rat step = (b - mid) / 2;
            Rat t = mid + step;
            while (cur.sign_at(t) == 0 || ch.count_roots(t, b) < 1) {
                step /= 2;
                t = mid + step;
            }
            a = t;
            inside = ch.count_roots(a, b);
        } else {
            int right = ch.count_roots(mid, b);
            if (right >= 1) {
                a = mid;
                inside = right;
            } else {
                b = mid;
                inside = ch.count_roots(a, b);
            }
        }
    }
}

} // namespace

LambdaValue largest_matching_root(const MatchingSpectrum& s, const Rat& eps) {
    LambdaValue lv;
    lv.poly = reduce_spectrum(s);
    lv.k = s.k;
    if (s.max_matching() == 0) {
        // no edges: mu = x^n, lambda = 0 by convention
        lv.no_edges = true;
        lv.qsf = lv.poly.to_qpoly().monic();
        lv.lo = lv.hi = 0;
        return lv;
    }
    QPoly q = lv.poly.to_qpoly();
    lv.qsf = squarefree_part(q);
    isolate_largest(lv.qsf, eps, lv.lo, lv.hi);
    // Keep the interval strictly positive: needed for k-th root reporting,
    // and true for the root itself whenever an edge exists.
    AlgebraicReal r = lv.y_root();
    while (!(r.lo > 0) && !r.exact()) r.refine();
    lv.lo = r.lo;
    lv.hi = r.hi;
    return lv;
}

LambdaValue largest_matching_root(const Hypergraph& h, const Rat& eps) {
    if (h.m() == 0) {
        MatchingSpectrum s{h.k, h.n, {Int(1)}};
        return largest_matching_root(s, eps);
    }
    return largest_matching_root(matching_counts(h), eps);
}

void LambdaValue::refine_to(const Rat& eps) {
    AlgebraicReal r = y_root();
    r.refine_to(eps);
    lo = r.lo;
    hi = r.hi;
}

void LambdaValue::lambda_bounds(const Rat& eps, Rat& llo, Rat& lhi) const {
    if (no_edges) {
        llo = lhi = 0;
        return;
    }
    AlgebraicReal r = y_root();
    Rat prec = eps / 4;
    while (true) {
        Rat l1, u1, l2, u2;
        kth_root_bounds(r.lo, k, prec, l1, u1);
        kth_root_bounds(r.hi, k, prec, l2, u2);
        if (u2 - l1 <= eps) {
            llo = l1;
            lhi = u2;
            return;
        }
        if (!r.exact()) r.refine();
        prec /= 2;
    }
}

double LambdaValue::lambda_approx() const {
    if (no_edges) return 0.0;
    Rat llo, lhi;
    lambda_bounds(Rat(1, Int(1) << 52), llo, lhi);
    Rat mid = (llo + lhi) / 2;
    return mid.get_d();
}

LambdaOrder compare_lambda_values(const LambdaValue& a, const LambdaValue& b,
                                  const Rat& eps) {
    if (a.no_edges && b.no_edges) return LambdaOrder::EQ_CERTIFIED;
    if (a.no_edges) return LambdaOrder::LT; // 0 < lambda(b), b has an edge
    if (b.no_edges) return LambdaOrder::GT;

    if (a.k == b.k) {
        // Same uniformity: compare the largest roots of the reduced
        // polynomials directly, with a gcd certificate for equality.
        AlgebraicReal ra = a.y_root();
        AlgebraicReal rb = b.y_root();
        QPoly g = qpoly_gcd(a.qsf, b.qsf);
        bool try_gcd = g.degree() >= 1;
        SturmChain gs(try_gcd ? g : a.qsf);
        while (true) {
            if (ra.hi < rb.lo) return LambdaOrder::LT;
            if (rb.hi < ra.lo) return LambdaOrder::GT;
            if (ra.exact() && rb.exact())
                return LambdaOrder::EQ_CERTIFIED; // overlapping points coincide
            if (ra.exact() != rb.exact()) {
                const AlgebraicReal& ex = ra.exact() ? ra : rb;
                const AlgebraicReal& iv = ra.exact() ? rb : ra;
                if (iv.p.sign_at(ex.lo) == 0)
                    return LambdaOrder::EQ_CERTIFIED; // the unique root of iv
            } else if (try_gcd) {
                auto g_roots_in = [&](const AlgebraicReal& r) {
                    return gs.count_roots(r.lo, r.hi);
                };
                int ca = g_roots_in(ra);
                int cb = g_roots_in(rb);
                if (ca == 0 || cb == 0) {
                    try_gcd = false; // largest roots not shared; will separate
                } else if (ca == 1 && cb == 1) {
                    Rat hull_lo = std::min(ra.lo, rb.lo);
                    Rat hull_hi = std::max(ra.hi, rb.hi);
                    if (gs.count_roots(hull_lo, hull_hi) == 1)
                        return LambdaOrder::EQ_CERTIFIED;
                }
            }
            ra.refine();
            rb.refine();
        }
    }

    // Different uniformities: compare lambda itself through k-th root bounds.
    Rat prec = eps;
    LambdaValue av = a, bv = b;
    for (int round = 0; round < 200; ++round) {
        Rat alo, ahi, blo, bhi;
        av.lambda_bounds(prec, alo, ahi);
        bv.lambda_bounds(prec, blo, bhi);
        if (ahi < blo) return LambdaOrder::LT;
        if (bhi < alo) return LambdaOrder::GT;
        av.refine_to(prec * prec);
        bv.refine_to(prec * prec);
        prec /= 16;
        if (prec < Rat(1, Int(1) << 512)) break;
    }
    return LambdaOrder::EQ;
}

LambdaOrder compare_lambda(const Hypergraph& a, const Hypergraph& b,
                           const Rat& eps) {
    if (a.m() < 1 || b.m() < 1)
        throw NoEdges("compare_lambda requires both hypergraphs to have an edge");
    return compare_lambda_values(largest_matching_root(a, eps),
                                 largest_matching_root(b, eps), eps);
}

namespace {

// x-space polynomial q_sf(x^k); squarefree because q_sf is squarefree with
// nonzero roots.
QPoly substitute_power(const QPoly& q, int k) {
    QPoly p;
    if (q.is_zero()) return p;
    p.c.assign(static_cast<size_t>(q.degree()) * k + 1, Rat(0));
    for (int i = 0; i <= q.degree(); ++i) p.c[static_cast<size_t>(i) * k] = q.c[i];
    p.trim();
    return p;
}

// Isolating interval for lambda(h) in x-space, among the roots of P.
AlgebraicReal lambda_x_space(const LambdaValue& lv, const QPoly& P) {
    if (lv.no_edges) return AlgebraicReal{P, Rat(0), Rat(0)};
    AlgebraicReal y = lv.y_root();
    while (!(y.lo > 0) && !y.exact()) y.refine();
    SturmChain pch(P);
    Rat prec(1, 1024);
    for (int round = 0; round < 512; ++round) {
        Rat l1, u1, l2, u2;
        kth_root_bounds(y.lo, lv.k, prec, l1, u1);
        kth_root_bounds(y.hi, lv.k, prec, l2, u2);
        if (y.exact() && l1 == u1) return AlgebraicReal{P, l1, l1}; // rational lambda
        Rat xlo = l1, xhi = u2;
        if (xlo > 0 && P.sign_at(xlo) != 0 && P.sign_at(xhi) != 0 &&
            P.sign_at(xlo) != P.sign_at(xhi) &&
            pch.count_roots(xlo, xhi) == 1)
            return AlgebraicReal{P, xlo, xhi};
        if (!y.exact()) y.refine();
        prec /= 4;
    }
    throw UndecidedAtBoundary("could not isolate lambda in x-space");
}

} // namespace

PreceqResult check_preceq(const SignedPolynomial& mu_g,
                          const SignedPolynomial& mu_h,
                          const LambdaValue& lambda_h) {
    SignedPolynomial diff = mu_g - mu_h;
    if (diff.is_zero()) return PreceqResult::PRECEQ;
    QPoly d = QPoly::from_signed(diff);

    AlgebraicReal alpha;
    if (lambda_h.no_edges) {
        alpha = AlgebraicReal{QPoly{{Rat(0), Rat(1)}}, Rat(0), Rat(0)}; // x = 0
    } else {
        QPoly P = substitute_power(lambda_h.qsf, lambda_h.k);
        alpha = lambda_x_space(lambda_h, P);
    }

    int s0 = sign_at_algebraic(d, alpha);
    if (s0 < 0) return PreceqResult::NEITHER;
    Rat safe;
    int above = count_roots_above_algebraic(d, alpha, &safe);
    if (s0 > 0 && above == 0) return PreceqResult::PRECEQ_STRICT;

    // Sample the sign of d between consecutive roots beyond lambda(h).
    QPoly dsf = squarefree_part(d);
    std::vector<Rat> samples{safe};
    if (above > 0) {
        auto roots = isolate_real_roots(dsf);
        std::vector<RootInterval> beyond;
        for (auto& ri : roots) {
            RootInterval r = ri;
            // classify against safe: refine straddlers
            while (!r.exact() && r.lo < safe && r.hi > safe) {
                Rat mid = (r.lo + r.hi) / 2;
                int s = dsf.sign_at(mid);
                if (s == 0) {
                    r.lo = r.hi = mid;
                } else if (s == dsf.sign_at(r.lo)) {
                    r.lo = mid;
                } else {
                    r.hi = mid;
                }
            }
            if (r.lo > safe || (r.exact() && r.lo > safe)) beyond.push_back(r);
        }
        for (size_t i = 0; i + 1 < beyond.size(); ++i)
            samples.push_back((beyond[i].hi + beyond[i + 1].lo) / 2);
        Rat far = cauchy_bound(d) + 1;
        if (far <= safe) far = safe + 1;
        samples.push_back(far);
    }
    for (const Rat& t : samples)
        if (d.sign_at(t) <= 0) return PreceqResult::NEITHER;
    return PreceqResult::PRECEQ;
}

PreceqResult check_preceq(const Hypergraph& g, const Hypergraph& h) {
    if (g.n < 1 || h.n < 1) throw EmptyVertexSet("check_preceq needs vertices");
    SignedPolynomial mu_g = matching_polynomial(g);
    SignedPolynomial mu_h = matching_polynomial(h);
    LambdaValue lh = largest_matching_root(h);
    return check_preceq(mu_g, mu_h, lh);
}

const char* to_string(LambdaOrder o) {
    switch (o) {
        case LambdaOrder::LT: return "LT";
        case LambdaOrder::GT: return "GT";
        case LambdaOrder::EQ: return "EQ";
        case LambdaOrder::EQ_CERTIFIED: return "EQ_CERTIFIED";
    }
    return "?";
}

const char* to_string(PreceqResult r) {
    switch (r) {
        case PreceqResult::PRECEQ_STRICT: return "PRECEQ_STRICT";
        case PreceqResult::PRECEQ: return "PRECEQ";
        case PreceqResult::NEITHER: return "NEITHER";
    }
    return "?";
}

} // namespace hypermatch
