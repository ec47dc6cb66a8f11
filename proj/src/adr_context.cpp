#include "adr/adr_context.hpp"

namespace adr {

namespace {

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

int ADRContext::label_index(int i, int j) const {
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k].i == i && labels[k].j == j) return static_cast<int>(k);
    throw input_error("label (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not in Lambda");
}

Matrix ADRContext::mult_coords(const Matrix& x, const Matrix& y) const {
    const Field& f = alg->field;
    Matrix out(f, 1, dimR);
    for (int a = 0; a < dimR; ++a) {
        const mpq_class& xa = x.at(0, a);
        if (f.is_zero(xa)) continue;
        for (int b = 0; b < dimR; ++b) {
            const mpq_class& yb = y.at(0, b);
            if (f.is_zero(yb)) continue;
            mpq_class c = f.mul(xa, yb);
            for (const auto& [k, v] : prod[a][b]) out.set(0, k, f.add(out.at(0, k), f.mul(c, v)));
        }
    }
    return out;
}

HomG ADRContext::hom_G(const Rep& m) const {
    if (m.alg != alg) throw input_error("hom_G: module over a different algebra");
    const Field& f = alg->field;
    HomG h;
    h.m = m;
    int ns = nsum();
    h.offset.assign(ns + 1, 0);
    for (int s = 0; s < ns; ++s) {
        h.basis.push_back(hom_space(summand[s], m));
        int flat = 0;
        for (size_t v = 0; v < m.dims.size(); ++v) flat += m.dims[v] * summand[s].dims[v];
        Matrix rows(f, static_cast<int>(h.basis[s].size()), flat);
        for (size_t r = 0; r < h.basis[s].size(); ++r) {
            Matrix fr = flatten_map(h.basis[s][r]);
            for (int c = 0; c < flat; ++c) rows.set(static_cast<int>(r), c, fr.at(0, c));
        }
        h.space.push_back(Subspace::from_rows(rows));
        h.offset[s + 1] = h.offset[s] + static_cast<int>(h.basis[s].size());
    }
    h.mod.ctx = shared_from_this();
    h.mod.dim = h.offset[ns];

    // action of each generating element: (x . y)|_s = sum_t y_t o x_{s->t}
    for (int k = 0; k < action_count(); ++k) {
        const Matrix& coords =
            k < ns ? e_coords[k] : rad_gens[static_cast<size_t>(k - ns)].coords;
        Matrix act(f, h.mod.dim, h.mod.dim);
        for (int b = 0; b < dimR; ++b) {
            const mpq_class& c = coords.at(0, b);
            if (f.is_zero(c)) continue;
            auto [s, t] = basis_block[b];
            int inner = b - block_offset[s][t];
            const RepMap& comp = block_basis[s][t][inner];
            for (size_t r = 0; r < h.basis[t].size(); ++r) {
                RepMap z = map_compose(h.basis[t][r], comp);  // G_s -> m
                Matrix zc = h.space[s].coords_of(flatten_map(z));
                for (int row = 0; row < zc.cols(); ++row)
                    act.set(h.offset[s] + row, h.offset[t] + static_cast<int>(r),
                            f.add(act.at(h.offset[s] + row, h.offset[t] + static_cast<int>(r)),
                                  f.mul(c, zc.at(0, row))));
            }
        }
        h.mod.act.push_back(act);
    }
    return h;
}

Matrix ADRContext::hom_G_map(const HomG& src, const HomG& dst, const RepMap& f) const {
    const Field& fl = alg->field;
    Matrix out(fl, dst.mod.dim, src.mod.dim);
    for (int s = 0; s < nsum(); ++s) {
        for (size_t r = 0; r < src.basis[s].size(); ++r) {
            RepMap z = map_compose(f, src.basis[s][r]);
            Matrix zc = dst.space[s].coords_of(flatten_map(z));
            for (int row = 0; row < zc.cols(); ++row)
                out.set(dst.offset[s] + row, src.offset[s] + static_cast<int>(r), zc.at(0, row));
        }
    }
    return out;
}

Subspace ADRContext::homg_submodule_subspace(const HomG& h, const SubRep& s) const {
    const Field& f = alg->field;
    std::vector<Matrix> rows;
    for (int blk = 0; blk < nsum(); ++blk) {
        int count = static_cast<int>(h.basis[blk].size());
        if (count == 0) continue;
        // constraints: composing with the quotient of s kills the map
        std::vector<Matrix> viol;
        int vcols = 0;
        for (int r = 0; r < count; ++r) {
            Matrix v(f, 1, 0);
            for (size_t vx = 0; vx < h.m.dims.size(); ++vx) {
                Matrix q = s.space[vx].quotient_map().first;
                v = Matrix::hstack(v, (q * h.basis[blk][r].block[vx]).flatten_row());
            }
            viol.push_back(v);
            vcols = v.cols();
        }
        Matrix W(f, count, vcols);
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < vcols; ++c) W.set(r, c, viol[r].at(0, c));
        Matrix ker = W.transpose().nullspace();
        // wait: we need combinations c with c*W = 0, i.e. left kernel
        for (int r = 0; r < ker.rows(); ++r) {
            Matrix full(f, 1, h.mod.dim);
            for (int c = 0; c < count; ++c) full.set(0, h.offset[blk] + c, ker.at(r, c));
            rows.push_back(full);
        }
    }
    Matrix stacked(f, static_cast<int>(rows.size()), h.mod.dim);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < h.mod.dim; ++c) stacked.set(static_cast<int>(r), c, rows[r].at(0, c));
    return Subspace::from_rows(stacked);
}

RepMap ADRContext::decode_block(const HomG& h, int block, const Matrix& row) const {
    RepMap out = zero_map(summand[block], h.m);
    const Field& f = alg->field;
    for (size_t r = 0; r < h.basis[block].size(); ++r) {
        const mpq_class& c = row.at(0, h.offset[block] + static_cast<int>(r));
        if (f.is_zero(c)) continue;
        out = map_add(summand[block], h.m, out, map_scale(h.basis[block][r], c));
    }
    return out;
}

void ADRContext::build_projectives_R() const {
    for (int s = 0; s < nsum(); ++s) {
        proj_R_.push_back(hom_G(summand[s]));
        const HomG& p = proj_R_.back();
        Matrix idflat = flatten_map(identity_map(summand[s]));
        Matrix idc = p.space[s].coords_of(idflat);
        Matrix gen(alg->field, 1, p.mod.dim);
        for (int c = 0; c < idc.cols(); ++c) gen.set(0, p.offset[s] + c, idc.at(0, c));
        proj_gen_.push_back(gen);
    }
}

const HomG& ADRContext::projective_R(int label_index) const {
    if (label_index < 0 || label_index >= nsum()) throw input_error("label out of range");
    return proj_R_[label_index];
}

const Matrix& ADRContext::projective_generator(int label_index) const {
    if (label_index < 0 || label_index >= nsum()) throw input_error("label out of range");
    return proj_gen_[label_index];
}

SCModule ADRContext::simple_R(int label_index) const {
    const HomG& p = projective_R(label_index);
    return sc_top(p.mod);
}

RepMap ADRContext::yoneda_transport(int label_index, const Matrix& f, const HomG& h) const {
    const Matrix& gen = projective_generator(label_index);
    // evaluate f at the identity element of the block
    Matrix v = f * gen.transpose();  // column in h coords
    return decode_block(h, label_index, v.transpose());
}

ADRContext::SCCover ADRContext::sc_projective_cover(const SCModule& m) const {
    const Field& f = alg->field;
    SCCover res{sc_zero(m.ctx), Matrix(f, m.dim, 0), {}};
    Subspace rad = sc_radical(m);
    auto [top, pi] = sc_quotient(m, rad);
    if (top.dim == 0) {
        if (m.dim != 0) throw internal_error("nonzero module with zero top");
        return res;
    }
    std::vector<SCModule> parts;
    std::vector<Matrix> cols;  // the maps P -> m, as matrices
    for (int k = 0; k < nsum(); ++k) {
        int c_k = sc_weight_space(top, k).dim();
        if (c_k == 0) continue;
        const HomG& p = projective_R(k);
        auto homs = sc_hom(p.mod, m);
        // rows of E: images of the generator in top coordinates
        Matrix E(f, static_cast<int>(homs.size()), top.dim);
        for (size_t r = 0; r < homs.size(); ++r) {
            Matrix img = pi * (homs[r] * proj_gen_[k].transpose());
            for (int c = 0; c < top.dim; ++c) E.set(static_cast<int>(r), c, img.at(c, 0));
        }
        // choose coefficient rows A with A*E in RREF: rref of [E | I]
        Matrix aug = Matrix::hstack(E, Matrix::identity(f, E.rows()));
        std::vector<int> piv;
        Matrix R = aug.rref(&piv);
        int rank = 0;
        for (int pv : piv)
            if (pv < top.dim) ++rank;
        if (rank != c_k) throw internal_error("projective cover: generator images deficient");
        for (int r = 0; r < rank; ++r) {
            Matrix phi(f, m.dim, p.mod.dim);
            for (size_t i = 0; i < homs.size(); ++i) {
                const mpq_class& a = R.at(r, top.dim + static_cast<int>(i));
                if (f.is_zero(a)) continue;
                phi = phi + homs[i].scaled(a);
            }
            parts.push_back(p.mod);
            cols.push_back(phi);
        }
        res.summands.push_back({k, c_k});
    }
    res.source = sc_direct_sum(parts);
    res.epi = Matrix(f, m.dim, res.source.dim);
    int off = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
        for (int c = 0; c < parts[p].dim; ++c)
            for (int r = 0; r < m.dim; ++r) res.epi.set(r, off + c, cols[p].at(r, c));
        off += parts[p].dim;
    }
    if (!sc_map_commutes(res.source, m, res.epi)) throw internal_error("cover does not commute");
    if (res.epi.rank() != m.dim) throw internal_error("cover not surjective");
    if (sc_top(res.source).dim != top.dim) throw internal_error("cover not right minimal");
    return res;
}

std::shared_ptr<const ADRContext> build_context(std::shared_ptr<const BoundAlgebra> alg) {
    auto ctx = std::make_shared<ADRContext>();
    const Field& f = alg->field;
    ctx->alg = alg;

    for (int v = 0; v < alg->quiver.nv; ++v) {
        Rep p = projective(alg, v);
        ctx->proj_ll.push_back(loewy_length(p));
    }
    for (int v = 0; v < alg->quiver.nv; ++v)
        for (int j = 1; j <= ctx->proj_ll[v]; ++j) {
            ctx->labels.push_back({v + 1, j});
            ctx->summand.push_back(truncated_projective(alg, v, j));
        }
    ctx->G = direct_sum(ctx->summand);
    int ns = ctx->nsum();

    // canonical End(G) basis, block by block
    ctx->block_basis.assign(ns, {});
    ctx->block_space.assign(ns, {});
    ctx->block_offset.assign(ns, std::vector<int>(ns, 0));
    int offset = 0;
    for (int s = 0; s < ns; ++s) {
        for (int t = 0; t < ns; ++t) {
            auto maps = hom_space(ctx->summand[s], ctx->summand[t]);
            int flat = 0;
            for (size_t v = 0; v < ctx->G.dims.size(); ++v)
                flat += ctx->summand[t].dims[v] * ctx->summand[s].dims[v];
            Matrix rows(f, static_cast<int>(maps.size()), flat);
            for (size_t r = 0; r < maps.size(); ++r) {
                Matrix fr = flatten_map(maps[r]);
                for (int c = 0; c < flat; ++c) rows.set(static_cast<int>(r), c, fr.at(0, c));
            }
            ctx->block_offset[s][t] = offset;
            offset += static_cast<int>(maps.size());
            for (size_t r = 0; r < maps.size(); ++r) ctx->basis_block.push_back({s, t});
            ctx->block_basis[s].push_back(std::move(maps));
            ctx->block_space[s].push_back(Subspace::from_rows(rows));
        }
    }
    ctx->dimR = offset;

    if (!f.is_rational()) {
        unsigned long bound = static_cast<unsigned long>(std::max(ctx->dimR, ctx->G.total_dim()));
        if (f.characteristic() <= bound)
            throw input_error("prime field too small for the trace-form radical: need p > " +
                              std::to_string(bound));
    }

    // structure constants: prod[x][y] = coords of y o x
    ctx->prod.assign(ctx->dimR, std::vector<std::vector<std::pair<int, mpq_class>>>(ctx->dimR));
    for (int x = 0; x < ctx->dimR; ++x) {
        auto [sx, tx] = ctx->basis_block[x];
        const RepMap& fx = ctx->block_basis[sx][tx][x - ctx->block_offset[sx][tx]];
        for (int y = 0; y < ctx->dimR; ++y) {
            auto [sy, ty] = ctx->basis_block[y];
            if (sy != tx) continue;
            const RepMap& fy = ctx->block_basis[sy][ty][y - ctx->block_offset[sy][ty]];
            RepMap z = map_compose(fy, fx);  // G_{sx} -> G_{ty}
            Matrix zc = ctx->block_space[sx][ty].coords_of(flatten_map(z));
            for (int c = 0; c < zc.cols(); ++c)
                if (!f.is_zero(zc.at(0, c)))
                    ctx->prod[x][y].push_back({ctx->block_offset[sx][ty] + c, zc.at(0, c)});
        }
    }

    // idempotents
    for (int s = 0; s < ns; ++s) {
        Matrix idc = ctx->block_space[s][s].coords_of(flatten_map(identity_map(ctx->summand[s])));
        Matrix e(f, 1, ctx->dimR);
        for (int c = 0; c < idc.cols(); ++c) e.set(0, ctx->block_offset[s][s] + c, idc.at(0, c));
        ctx->e_coords.push_back(e);
    }
    ctx->one_coords = Matrix(f, 1, ctx->dimR);
    for (const auto& e : ctx->e_coords) ctx->one_coords = ctx->one_coords + e;

    // idempotent identities
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            Matrix p = ctx->mult_coords(ctx->e_coords[s], ctx->e_coords[t]);
            if (s == t ? (p != ctx->e_coords[s]) : !p.is_zero())
                throw internal_error("idempotents not orthogonal");
        }
    for (int b = 0; b < ctx->dimR; ++b) {
        Matrix unit(f, 1, ctx->dimR);
        unit.set(0, b, f.one());
        if (ctx->mult_coords(ctx->one_coords, unit) != unit ||
            ctx->mult_coords(unit, ctx->one_coords) != unit)
            throw internal_error("sum of idempotents is not the identity");
    }

    // radical via the trace form of the faithful action on G
    Matrix gram(f, ctx->dimR, ctx->dimR);
    for (int x = 0; x < ctx->dimR; ++x) {
        auto [sx, tx] = ctx->basis_block[x];
        const RepMap& fx = ctx->block_basis[sx][tx][x - ctx->block_offset[sx][tx]];
        for (int y = 0; y < ctx->dimR; ++y) {
            auto [sy, ty] = ctx->basis_block[y];
            if (sy != tx || ty != sx) continue;  // trace vanishes unless y o x is an endo of G_sx
            const RepMap& fy = ctx->block_basis[sy][ty][y - ctx->block_offset[sy][ty]];
            mpq_class tr(0);
            for (size_t v = 0; v < ctx->G.dims.size(); ++v) {
                Matrix prod = fy.block[v] * fx.block[v];
                for (int d = 0; d < prod.rows(); ++d) tr = f.add(tr, prod.at(d, d));
            }
            gram.set(x, y, tr);
        }
    }
    ctx->radR = Subspace::from_rows(gram.nullspace());

    if (ctx->dimR - ctx->radR.dim() != ns)
        throw internal_error("dim(R/rad R) does not match the label count");

    // rad R is graded by the idempotent blocks: e_s (rad R) e_t is exactly the
    // coordinate projection to block (s,t). Work with the graded pieces.
    auto block_of = [&](int s, int t, const Matrix& full_row) {
        int lo = ctx->block_offset[s][t];
        int len = static_cast<int>(ctx->block_basis[s][t].size());
        Matrix row(f, 1, len);
        for (int c = 0; c < len; ++c) row.set(0, c, full_row.at(0, lo + c));
        return row;
    };
    std::vector<std::vector<Subspace>> rad_piece(ns, std::vector<Subspace>());
    int graded_dim = 0;
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            int len = static_cast<int>(ctx->block_basis[s][t].size());
            Matrix rows(f, ctx->radR.dim(), len);
            for (int r = 0; r < ctx->radR.dim(); ++r) {
                Matrix br = block_of(s, t, ctx->radR.basis().row(r));
                for (int c = 0; c < len; ++c) rows.set(r, c, br.at(0, c));
            }
            rad_piece[s].push_back(Subspace::from_rows(rows));
            graded_dim += rad_piece[s].back().dim();
        }
    if (graded_dim != ctx->radR.dim()) throw internal_error("radical is not weight graded");

    // primitivity of each idempotent: e R e is local
    for (int s = 0; s < ns; ++s) {
        int len = static_cast<int>(ctx->block_basis[s][s].size());
        if (len - rad_piece[s][s].dim() != 1)
            throw internal_error("End(G_s) is not local at label " + ctx->labels[s].str());
    }

    // chain T_1 = rad, T_{k+1} = sum_g g T_k over graded pieces; then
    // rad^m = sum_{k >= m} T_k, so the nilpotency index is the first zero T.
    auto embed_row = [&](int s, int t, const Matrix& row) {
        Matrix full(f, 1, ctx->dimR);
        int lo = ctx->block_offset[s][t];
        for (int c = 0; c < row.cols(); ++c) full.set(0, lo + c, row.at(0, c));
        return full;
    };
    auto chain_step = [&](const std::vector<std::vector<Subspace>>& cur) {
        std::vector<std::vector<Subspace>> next(ns, std::vector<Subspace>());
        for (int s = 0; s < ns; ++s)
            for (int t = 0; t < ns; ++t) {
                std::vector<Matrix> rows;
                for (int u = 0; u < ns; ++u) {
                    const Subspace& left = rad_piece[s][u];   // factors g in block (s,u)
                    const Subspace& right = cur[u][t];
                    for (int i = 0; i < left.dim(); ++i)
                        for (int j = 0; j < right.dim(); ++j) {
                            Matrix p = ctx->mult_coords(embed_row(s, u, left.basis().row(i)),
                                                        embed_row(u, t, right.basis().row(j)));
                            rows.push_back(block_of(s, t, p));
                        }
                }
                int len = static_cast<int>(ctx->block_basis[s][t].size());
                Matrix stacked(f, static_cast<int>(rows.size()), len);
                for (size_t r = 0; r < rows.size(); ++r)
                    for (int c = 0; c < len; ++c) stacked.set(static_cast<int>(r), c, rows[r].at(0, c));
                next[s].push_back(Subspace::from_rows(stacked));
            }
        return next;
    };
    auto chain_dim = [&](const std::vector<std::vector<Subspace>>& cur) {
        int d = 0;
        for (int s = 0; s < ns; ++s)
            for (int t = 0; t < ns; ++t) d += cur[s][t].dim();
        return d;
    };
    std::vector<std::vector<std::vector<Subspace>>> chain;  // T_1, T_2, ...
    chain.push_back(rad_piece);
    while (chain_dim(chain.back()) > 0) {
        if (static_cast<int>(chain.size()) > ctx->dimR)
            throw internal_error("radical is not nilpotent");
        chain.push_back(chain_step(chain.back()));
    }
    ctx->rad_nilpotency = static_cast<int>(chain.size());

    // rad^2 pieces = sum of T_k, k >= 2
    std::vector<std::vector<Subspace>> rad2(ns, std::vector<Subspace>());
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            int len = static_cast<int>(ctx->block_basis[s][t].size());
            Subspace acc = Subspace::zero(f, len);
            for (size_t k = 1; k < chain.size(); ++k) acc = acc.sum(chain[k][s][t]);
            rad2[s].push_back(acc);
        }

    // weight-graded radical generators: lifts of rad/rad^2, block by block
    int expect_gens = 0;
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            expect_gens += rad_piece[s][t].dim() - rad2[s][t].dim();
            Subspace acc = rad2[s][t];
            for (int r = 0; r < rad_piece[s][t].dim(); ++r) {
                Matrix row = rad_piece[s][t].basis().row(r);
                if (acc.contains(row)) continue;
                ctx->rad_gens.push_back({embed_row(s, t, row), s, t});
                acc = acc.sum(Subspace::from_rows(row));
            }
        }
    if (static_cast<int>(ctx->rad_gens.size()) != expect_gens)
        throw internal_error("radical generator selection is inconsistent");

    ctx->build_projectives_R();

    // splitness: every simple has a one-dimensional endomorphism ring,
    // equivalently each projective has simple top of dimension 1
    for (int s = 0; s < ns; ++s)
        if (sc_top(ctx->proj_R_[s].mod).dim != 1)
            throw internal_error("algebra is not split basic: top of P_" + ctx->labels[s].str() +
                                 " has dimension != 1");

    return ctx;
}

}  // namespace adr
