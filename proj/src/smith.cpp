#include "ringforge/smith.hpp"

#include <algorithm>

namespace ringforge {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::mul(const Mat& o, const ExactRing& r) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: shape mismatch");
    Mat out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out.canon(r);
}

Mat Mat::canon(const ExactRing& r) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = r.canon(at(i, j));
    return out;
}

void Mat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t rws = 0; rws < rows_; ++rws) std::swap(at(rws, i), at(rws, j));
}

void Mat::row_axpy(size_t i, size_t j, const Int& q, const ExactRing& r) {
    for (size_t c = 0; c < cols_; ++c) at(i, c) = r.canon(at(i, c) - q * at(j, c));
}

void Mat::col_axpy(size_t i, size_t j, const Int& q, const ExactRing& r) {
    for (size_t rws = 0; rws < rows_; ++rws) at(rws, i) = r.canon(at(rws, i) - q * at(rws, j));
}

void Mat::scale_row(size_t i, const Int& u, const ExactRing& r) {
    for (size_t c = 0; c < cols_; ++c) at(i, c) = r.canon(at(i, c) * u);
}

void Mat::scale_col(size_t j, const Int& u, const ExactRing& r) {
    for (size_t rws = 0; rws < rows_; ++rws) at(rws, j) = r.canon(at(rws, j) * u);
}

Int Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::det: not square");
    size_t n = rows_;
    if (n == 0) return Int(1);
    if (n == 1) return at(0, 0);
    Int sum = 0;
    for (size_t j = 0; j < n; ++j) {
        if (at(0, j) == 0) continue;
        Mat minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = at(i, c);
            }
        }
        Int term = at(0, j) * minor.det();
        if (j % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

namespace {

struct Workspace {
    Mat d, p, q;
    const ExactRing& ring;

    Workspace(const Mat& a, const ExactRing& r)
        : d(a.canon(r)), p(Mat::identity(a.rows())), q(Mat::identity(a.cols())), ring(r) {}

    void swap_rows(size_t i, size_t j) { d.swap_rows(i, j); p.swap_rows(i, j); }
    void swap_cols(size_t i, size_t j) { d.swap_cols(i, j); q.swap_cols(i, j); }
    void row_axpy(size_t i, size_t j, const Int& f) { d.row_axpy(i, j, f, ring); p.row_axpy(i, j, f, ring); }
    void col_axpy(size_t i, size_t j, const Int& f) { d.col_axpy(i, j, f, ring); q.col_axpy(i, j, f, ring); }
    void scale_row(size_t i, const Int& u) { d.scale_row(i, u, ring); p.scale_row(i, u, ring); }
    void scale_col(size_t j, const Int& u) { d.scale_col(j, u, ring); q.scale_col(j, u, ring); }
};

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

bool find_min_abs(const Mat& d, size_t t, size_t& bi, size_t& bj) {
    bool found = false;
    Int best = 0;
    for (size_t i = t; i < d.rows(); ++i)
        for (size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int v = int_abs(d.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                bi = i;
                bj = j;
            }
        }
    return found;
}

void smith_step_integers(Workspace& w, size_t t) {
    Mat& d = w.d;
    for (;;) {
        size_t bi = t, bj = t;
        if (!find_min_abs(d, t, bi, bj)) return; // remaining submatrix is zero
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);

        bool clean = true;
        for (size_t i = t + 1; i < d.rows(); ++i) {
            if (d.at(i, t) == 0) continue;
            Int qv = d.at(i, t) / d.at(t, t); // truncated: remainder smaller than pivot
            w.row_axpy(i, t, qv);
            if (d.at(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < d.cols(); ++j) {
            if (d.at(t, j) == 0) continue;
            Int qv = d.at(t, j) / d.at(t, t);
            w.col_axpy(j, t, qv);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // a strictly smaller entry appeared; re-pivot

        // pivot must divide the interior, so later diagonal entries stay
        // multiples of this one
        bool merged = false;
        for (size_t i = t + 1; i < d.rows() && !merged; ++i)
            for (size_t j = t + 1; j < d.cols() && !merged; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    w.row_axpy(t, i, Int(-1)); // row_t += row_i
                    merged = true;
                }
        if (!merged) return;
    }
}

DiagCertificate smith_integers(const ExactRing& r, const Mat& a) {
    Workspace w(a, r);
    size_t steps = std::min(a.rows(), a.cols());
    for (size_t t = 0; t < steps; ++t) smith_step_integers(w, t);
    for (size_t t = 0; t < steps; ++t)
        if (w.d.at(t, t) < 0) w.scale_row(t, Int(-1));
    return {std::move(w.p), std::move(w.d), std::move(w.q)};
}

unsigned val_p(const Int& x, const Int& p, unsigned cap) {
    // valuation of a canonical representative in [1, p^cap)
    unsigned v = 0;
    Int y = x;
    while (v < cap && y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

DiagCertificate smith_prime_power(const PrimePower& pp, const Mat& a) {
    ExactRing r = ExactRing::residue(pp.pk, {{pp.p, pp.e}});
    Workspace w(a, r);
    Mat& d = w.d;
    size_t steps = std::min(a.rows(), a.cols());
    for (size_t t = 0; t < steps; ++t) {
        // pivot on the entry of minimal p-valuation; it divides everything
        bool found = false;
        unsigned best = pp.e;
        size_t bi = t, bj = t;
        for (size_t i = t; i < d.rows(); ++i)
            for (size_t j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                unsigned v = val_p(d.at(i, j), pp.p, pp.e);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (!found) break;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);

        // normalize the pivot to exactly p^v
        Int pv = int_pow(pp.p, best);
        Int unit = d.at(t, t) / pv;
        w.scale_row(t, r.inv_unit(unit));

        for (size_t i = t + 1; i < d.rows(); ++i) {
            if (d.at(i, t) == 0) continue;
            w.row_axpy(i, t, d.at(i, t) / pv); // exact: valuation >= best
        }
        for (size_t j = t + 1; j < d.cols(); ++j) {
            if (d.at(t, j) == 0) continue;
            w.col_axpy(j, t, d.at(t, j) / pv);
        }
    }
    return {std::move(w.p), std::move(w.d), std::move(w.q)};
}

Mat crt_mats(const ExactRing& r, const std::vector<Mat>& mats) {
    Mat out(mats[0].rows(), mats[0].cols());
    std::vector<Int> res(mats.size());
    for (size_t i = 0; i < out.rows(); ++i)
        for (size_t j = 0; j < out.cols(); ++j) {
            for (size_t c = 0; c < mats.size(); ++c) res[c] = mats[c].at(i, j);
            out.at(i, j) = r.crt(res);
        }
    return out;
}

DiagCertificate smith_finite(const ExactRing& r, const Mat& a) {
    const auto& comps = r.components();
    if (comps.size() == 1 && r.modulus() == comps[0].pk) {
        DiagCertificate cert = smith_prime_power(comps[0], a);
        return cert;
    }
    std::vector<Mat> ps, ds, qs;
    for (const auto& pp : comps) {
        DiagCertificate c = smith_prime_power(pp, a);
        ps.push_back(std::move(c.p));
        ds.push_back(std::move(c.d));
        qs.push_back(std::move(c.q));
    }
    DiagCertificate cert(crt_mats(r, ps), crt_mats(r, ds), crt_mats(r, qs));

    // canonicalize diagonal entries to gcd(d, m), folding the unit into Q
    size_t steps = std::min(a.rows(), a.cols());
    for (size_t t = 0; t < steps; ++t) {
        Int dv = cert.d.at(t, t);
        Int g = r.ideal_gcd(dv);
        if (dv == g) continue;
        std::vector<Int> wres;
        for (const auto& pp : comps) {
            Int dc = mod_floor(dv, pp.pk);
            if (dc == 0) {
                wres.push_back(1);
                continue;
            }
            unsigned v = val_p(dc, pp.p, pp.e);
            Int pv = int_pow(pp.p, v);
            ExactRing comp = ExactRing::residue(pp.pk, {{pp.p, pp.e}});
            Int unit = comp.inv_unit(dc / pv);
            wres.push_back(mod_floor((g / pv) * unit, pp.pk));
        }
        Int wu = r.crt(wres);
        cert.q.scale_col(t, wu, r);
        cert.d.scale_col(t, wu, r);
    }
    return cert;
}

} // namespace

DiagCertificate smith_form(const ExactRing& r, const Mat& a) {
    if (a.rows() == 0 || a.cols() == 0)
        return {Mat::identity(a.rows()), a, Mat::identity(a.cols())};
    if (r.is_integers()) return smith_integers(r, a);
    return smith_finite(r, a);
}

std::vector<Int> canonical_form(const ExactRing& r, const std::vector<Int>& entries) {
    if (r.is_integers())
        throw std::invalid_argument("canonical_form: requires a finite ring");
    for (const Int& e : entries)
        if (r.is_unit(e))
            throw std::invalid_argument("canonical_form: entries must generate proper ideals");
    if (entries.empty()) return {};

    const auto& comps = r.components();
    size_t n = entries.size();
    // per prime: exponents of the component ideals, largest first
    std::vector<std::vector<unsigned>> exps(comps.size(), std::vector<unsigned>(n));
    for (size_t c = 0; c < comps.size(); ++c) {
        for (size_t k = 0; k < n; ++k) {
            Int g = r.ideal_gcd(entries[k]);
            exps[c][k] = g == 0 ? comps[c].e : val_p(g, comps[c].p, comps[c].e);
        }
        std::sort(exps[c].begin(), exps[c].end(), std::greater<unsigned>());
    }

    std::vector<Int> out;
    for (size_t k = 0; k < n; ++k) {
        Int g = 1;
        for (size_t c = 0; c < comps.size(); ++c) g *= int_pow(comps[c].p, exps[c][k]);
        out.push_back(r.canon(g));
    }
    while (!out.empty() && out.back() == 1) out.pop_back();
    return out;
}

} // namespace ringforge
