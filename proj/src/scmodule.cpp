#include "adr/scmodule.hpp"

#include <random>

#include "adr/adr_context.hpp"

namespace adr {

namespace {

const Field& fld(const SCModule& m) { return m.ctx->alg->field; }

// coordinates of each column of `cols` in the RREF basis of s
Matrix coords_cols(const Subspace& s, const Matrix& cols) {
    const Field& f = s.field();
    Matrix out(f, s.dim(), cols.cols());
    for (int c = 0; c < cols.cols(); ++c) {
        Matrix row(f, 1, cols.rows());
        for (int r = 0; r < cols.rows(); ++r) row.set(0, r, cols.at(r, c));
        Matrix cc = s.coords_of(row);
        for (int r = 0; r < s.dim(); ++r) out.set(r, c, cc.at(0, r));
    }
    return out;
}

}  // namespace

SCModule sc_zero(std::shared_ptr<const ADRContext> ctx) {
    SCModule m;
    m.dim = 0;
    m.act.assign(ctx->action_count(), Matrix(ctx->alg->field, 0, 0));
    m.ctx = std::move(ctx);
    return m;
}

SCModule sc_direct_sum(const std::vector<SCModule>& parts) {
    if (parts.empty()) throw input_error("direct sum of empty list");
    SCModule m;
    m.ctx = parts[0].ctx;
    const Field& f = fld(parts[0]);
    m.dim = 0;
    for (const auto& p : parts) {
        if (p.ctx != m.ctx) throw input_error("direct sum across different contexts");
        m.dim += p.dim;
    }
    for (int k = 0; k < m.ctx->action_count(); ++k) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.act[k]);
        m.act.push_back(Matrix::block_diag(f, blocks));
    }
    return m;
}

Matrix sc_summand_inclusion(const std::vector<SCModule>& parts, int k) {
    const Field& f = fld(parts[0]);
    int total = 0, before = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (static_cast<int>(i) < k) before += parts[i].dim;
        total += parts[i].dim;
    }
    Matrix m(f, total, parts[k].dim);
    for (int i = 0; i < parts[k].dim; ++i) m.set(before + i, i, f.one());
    return m;
}

Matrix sc_summand_projection(const std::vector<SCModule>& parts, int k) {
    const Field& f = fld(parts[0]);
    int total = 0, before = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (static_cast<int>(i) < k) before += parts[i].dim;
        total += parts[i].dim;
    }
    Matrix m(f, parts[k].dim, total);
    for (int i = 0; i < parts[k].dim; ++i) m.set(i, before + i, f.one());
    return m;
}

bool sc_map_commutes(const SCModule& m, const SCModule& n, const Matrix& x) {
    for (int k = 0; k < m.ctx->action_count(); ++k)
        if (n.act[k] * x != x * m.act[k]) return false;
    return true;
}

namespace {

// rad(R) * S for a subspace S, via the radical generators
Subspace rad_of(const SCModule& m, const Subspace& s) {
    int ns = m.ctx->nsum();
    Subspace t = Subspace::zero(fld(m), m.dim);
    for (int g = ns; g < m.ctx->action_count(); ++g) t = t.sum(s.image_under(m.act[g]));
    while (true) {
        Subspace next = t;
        for (int g = ns; g < m.ctx->action_count(); ++g) next = next.sum(t.image_under(m.act[g]));
        if (next.dim() == t.dim()) return next;
        t = next;
    }
}

}  // namespace

Subspace sc_radical(const SCModule& m) { return rad_of(m, Subspace::full(fld(m), m.dim)); }

Subspace sc_socle(const SCModule& m) {
    const Field& f = fld(m);
    int ns = m.ctx->nsum();
    Matrix stacked(f, 0, m.dim);
    for (int g = ns; g < m.ctx->action_count(); ++g) stacked = Matrix::vstack(stacked, m.act[g]);
    if (stacked.rows() == 0) return Subspace::full(f, m.dim);
    return Subspace::from_rows(stacked.nullspace());
}

std::vector<Subspace> sc_radical_series(const SCModule& m) {
    std::vector<Subspace> series;
    Subspace s = Subspace::full(fld(m), m.dim);
    series.push_back(s);
    while (s.dim() > 0) {
        s = rad_of(m, s);
        series.push_back(s);
    }
    return series;
}

std::vector<Subspace> sc_socle_series(const SCModule& m) {
    const Field& f = fld(m);
    std::vector<Subspace> series;
    series.push_back(Subspace::zero(f, m.dim));
    while (series.back().dim() < m.dim) {
        auto [q, qmap] = sc_quotient(m, series.back());
        Subspace soc = sc_socle(q);
        Subspace next = soc.preimage(qmap);
        if (next.dim() <= series.back().dim()) throw internal_error("socle series stalled");
        series.push_back(next);
    }
    return series;
}

int sc_loewy_length(const SCModule& m) {
    if (m.dim == 0) return 0;
    return static_cast<int>(sc_radical_series(m).size()) - 1;
}

std::pair<SCModule, Matrix> sc_submodule(const SCModule& m, const Subspace& s) {
    SCModule sub;
    sub.ctx = m.ctx;
    sub.dim = s.dim();
    Matrix incl = s.basis().transpose();  // dim m x dim sub
    for (int k = 0; k < m.ctx->action_count(); ++k) {
        if (!s.contains(s.image_under(m.act[k])))
            throw input_error("subspace is not action-stable");
        sub.act.push_back(coords_cols(s, m.act[k] * incl));
    }
    return {sub, incl};
}

std::pair<SCModule, Matrix> sc_quotient(const SCModule& m, const Subspace& s) {
    SCModule q;
    q.ctx = m.ctx;
    auto [qmat, qdim] = s.quotient_map();
    q.dim = qdim;
    Matrix sec = s.quotient_section();
    for (int k = 0; k < m.ctx->action_count(); ++k) {
        if (!s.contains(s.image_under(m.act[k])))
            throw input_error("quotient by a non-stable subspace");
        q.act.push_back(qmat * m.act[k] * sec);
    }
    return {q, qmat};
}

SCModule sc_top(const SCModule& m) { return sc_quotient(m, sc_radical(m)).first; }

Subspace sc_weight_space(const SCModule& m, int label_index) {
    return Subspace::from_rows(m.act[label_index].transpose());
}

std::vector<int> comp_multiplicities(const SCModule& m) {
    std::vector<int> out;
    for (int k = 0; k < m.ctx->nsum(); ++k) out.push_back(m.act[k].rank());
    int total = 0;
    for (int c : out) total += c;
    if (total != m.dim) throw internal_error("composition multiplicities do not add up");
    return out;
}

std::vector<Matrix> sc_hom(const SCModule& m, const SCModule& n) {
    if (m.ctx != n.ctx) throw input_error("sc_hom across different contexts");
    const Field& f = fld(m);
    const ADRContext& ctx = *m.ctx;
    int ns = ctx.nsum();

    std::vector<Subspace> wm, wn;
    int dm_total = 0, dn_total = 0;
    for (int a = 0; a < ns; ++a) {
        wm.push_back(sc_weight_space(m, a));
        wn.push_back(sc_weight_space(n, a));
        dm_total += wm.back().dim();
        dn_total += wn.back().dim();
    }
    if (dm_total != m.dim || dn_total != n.dim)
        throw internal_error("weight decomposition does not fill the module");

    std::vector<int> off(ns + 1, 0);
    for (int a = 0; a < ns; ++a) off[a + 1] = off[a] + wn[a].dim() * wm[a].dim();
    int D = off[ns];
    Subspace sol = Subspace::full(f, D);

    for (size_t g = 0; g < ctx.rad_gens.size(); ++g) {
        const auto& gen = ctx.rad_gens[g];
        int s = gen.s, t = gen.t;
        const Matrix& am = m.act[ns + static_cast<int>(g)];
        const Matrix& an = n.act[ns + static_cast<int>(g)];
        Matrix gm = coords_cols(wm[s], am * wm[t].basis().transpose());  // W_t(m) -> W_s(m)
        Matrix gn = coords_cols(wn[s], an * wn[t].basis().transpose());
        int rows = wn[s].dim() * wm[t].dim();
        if (rows == 0) continue;
        Matrix C(f, rows, D);
        for (int i = 0; i < wn[s].dim(); ++i)
            for (int j = 0; j < wm[t].dim(); ++j) {
                int r = i * wm[t].dim() + j;
                for (int k = 0; k < wm[s].dim(); ++k) {
                    int col = off[s] + i * wm[s].dim() + k;
                    C.set(r, col, f.add(C.at(r, col), gm.at(k, j)));
                }
                for (int k = 0; k < wn[t].dim(); ++k) {
                    int col = off[t] + k * wm[t].dim() + j;
                    C.set(r, col, f.sub(C.at(r, col), gn.at(i, k)));
                }
            }
        sol = sol.intersect(Subspace::from_rows(C.nullspace()));
        if (sol.dim() == 0) break;
    }

    // reassemble full matrices and canonicalize
    std::vector<Matrix> pre;
    for (int r = 0; r < sol.dim(); ++r) {
        Matrix x(f, n.dim, m.dim);
        for (int a = 0; a < ns; ++a) {
            int dm = wm[a].dim(), dn = wn[a].dim();
            if (dm == 0 || dn == 0) continue;
            Matrix xa(f, dn, dm);
            for (int i = 0; i < dn; ++i)
                for (int j = 0; j < dm; ++j) xa.set(i, j, sol.basis().at(r, off[a] + i * dm + j));
            // lift: n-coords basis * xa * (weight coordinates of m)
            Matrix em(f, dm, m.dim);  // weight-coordinate extraction
            for (int i = 0; i < dm; ++i) {
                int p = wm[a].pivots()[i];
                for (int c = 0; c < m.dim; ++c) em.set(i, c, m.act[a].at(p, c));
            }
            x = x + wn[a].basis().transpose() * xa * em;
        }
        pre.push_back(x.flatten_row());
    }
    Matrix stacked(f, static_cast<int>(pre.size()), n.dim * m.dim);
    for (size_t i = 0; i < pre.size(); ++i)
        for (int j = 0; j < n.dim * m.dim; ++j) stacked.set(static_cast<int>(i), j, pre[i].at(0, j));
    Subspace canon = Subspace::from_rows(stacked);
    std::vector<Matrix> out;
    for (int i = 0; i < canon.dim(); ++i)
        out.push_back(Matrix::unflatten(f, canon.basis().row(i), n.dim, m.dim));
    return out;
}

Subspace sc_sub_generated(const SCModule& m, const Matrix& rows) {
    Subspace s = Subspace::from_rows(rows);
    while (true) {
        Subspace next = s;
        for (int k = 0; k < m.ctx->action_count(); ++k) next = next.sum(s.image_under(m.act[k]));
        if (next.dim() == s.dim()) return next;
        s = next;
    }
}

std::optional<Matrix> find_sc_iso(const SCModule& m, const SCModule& n, uint64_t seed) {
    if (m.dim != n.dim) return std::nullopt;
    for (int a = 0; a < m.ctx->nsum(); ++a)
        if (m.act[a].rank() != n.act[a].rank()) return std::nullopt;
    auto homs = sc_hom(m, n);
    for (const auto& h : homs)
        if (h.invertible()) return h;
    const Field& f = fld(m);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix x(f, n.dim, m.dim);
        for (const auto& h : homs) {
            long c = static_cast<long>(rng() % 9) - 4;
            if (c == 0) c = 1;
            x = x + h.scaled(f.from_long(c));
        }
        if (x.invertible()) return x;
    }
    return std::nullopt;
}

}  // namespace adr
