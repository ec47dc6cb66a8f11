#include "adr/algebra.hpp"

#include <algorithm>
#include <map>

namespace adr {

namespace {

struct RawPath {
    int src;
    std::vector<int> arrows;
    int tgt;
};

bool path_less(const RawPath& a, const RawPath& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.src < b.src;
}

constexpr size_t kPathGuard = 200000;

// sparse row: (column, coeff) sorted by column, no zero coeffs
using SRow = std::vector<std::pair<int, mpq_class>>;

SRow axpy(const Field& f, const SRow& a, const mpq_class& c, const SRow& b) {
    // a + c*b, merged
    SRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            mpq_class v = f.mul(c, b[j].second);
            if (!f.is_zero(v)) out.push_back({b[j].first, v});
            ++j;
        } else {
            mpq_class v = f.add(a[i].second, f.mul(c, b[j].second));
            if (!f.is_zero(v)) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// incremental sparse row-reduction structure
class SparseRref {
public:
    explicit SparseRref(Field f) : f_(f) {}

    void add_row(SRow r) {
        while (!r.empty()) {
            int c = r.front().first;
            auto it = rows_.find(c);
            if (it == rows_.end()) {
                mpq_class inv = f_.inv(r.front().second);
                for (auto& [col, v] : r) v = f_.mul(v, inv);
                rows_.emplace(c, std::move(r));
                return;
            }
            r = axpy(f_, r, f_.neg(r.front().second), it->second);
        }
    }

    // full back-elimination; afterwards every pivot row touches only
    // non-pivot columns beyond its lead
    void finish() {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SRow& row = it->second;
            bool again = true;
            while (again) {
                again = false;
                for (size_t k = 1; k < row.size(); ++k) {
                    auto jt = rows_.find(row[k].first);
                    if (jt != rows_.end()) {
                        row = axpy(f_, row, f_.neg(row[k].second), jt->second);
                        again = true;
                        break;
                    }
                }
            }
        }
    }

    SRow reduce(SRow v) const {
        SRow out;
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) {
                out.push_back(v.front());
                v.erase(v.begin());
            } else {
                v = axpy(f_, v, f_.neg(v.front().second), it->second);
            }
        }
        return out;
    }

    bool is_pivot(int c) const { return rows_.count(c) > 0; }
    bool contains_unit(int c) const {
        auto it = rows_.find(c);
        return it != rows_.end() && it->second.size() == 1;
    }
    const std::map<int, SRow>& rows() const { return rows_; }

private:
    Field f_;
    std::map<int, SRow> rows_;  // pivot column -> normalized row
};

}  // namespace

Matrix BoundAlgebra::mult(const Matrix& x, const Matrix& y) const {
    Matrix out(field, 1, dim);
    for (int i = 0; i < dim; ++i) {
        const mpq_class& xi = x.at(0, i);
        if (field.is_zero(xi)) continue;
        for (int j = 0; j < dim; ++j) {
            const mpq_class& yj = y.at(0, j);
            if (field.is_zero(yj)) continue;
            mpq_class c = field.mul(xi, yj);
            for (int k = 0; k < dim; ++k) {
                const mpq_class& m = left_mult[i].at(k, j);
                if (!field.is_zero(m)) out.set(0, k, field.add(out.at(0, k), field.mul(c, m)));
            }
        }
    }
    return out;
}

Matrix BoundAlgebra::reduce_path(int src, const std::vector<int>& arrows) const {
    Matrix out(field, 1, dim);
    if (static_cast<int>(arrows.size()) >= max_path_len_ - 1) return out;  // lies in rad^{LL}
    auto it = path_id_.find({src, arrows});
    if (it == path_id_.end()) throw internal_error("reduce_path: path not enumerated");
    for (const auto& [b, c] : path_residues_[it->second]) out.set(0, b, field.add(out.at(0, b), c));
    return out;
}

std::string BoundAlgebra::basis_label(int i) const {
    const BasisPath& p = basis[i];
    if (p.arrows.empty()) return "e" + std::to_string(p.src + 1);
    std::string s;
    for (size_t k = p.arrows.size(); k-- > 0;) {
        s += quiver.arrows[p.arrows[k]].name;
        if (k > 0) s += "*";
    }
    return s;
}

std::shared_ptr<const BoundAlgebra> build_bound_algebra(const AlgebraSpec& spec, int max_len) {
    const Quiver& q = spec.quiver;
    const Field& f = spec.field;
    for (const auto& r : spec.relations)
        for (const auto& t : r.terms)
            if (t.arrows.size() < 2) throw input_error("relation path of length < 2");

    std::vector<std::vector<RawPath>> by_len;
    by_len.push_back({});
    for (int v = 0; v < q.nv; ++v) by_len[0].push_back({v, {}, v});
    size_t total_paths = q.nv;

    auto extend = [&]() {
        const auto& prev = by_len.back();
        std::vector<RawPath> next;
        for (const auto& p : prev)
            for (size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].src == p.tgt) {
                    RawPath np{p.src, p.arrows, q.arrows[a].tgt};
                    np.arrows.push_back(static_cast<int>(a));
                    next.push_back(std::move(np));
                }
        total_paths += next.size();
        if (total_paths > kPathGuard)
            throw input_error("length bound exceeded: ideal not admissible or bound too small");
        by_len.push_back(std::move(next));
    };

    for (int L = 2; L <= max_len + 1; ++L) {
        while (static_cast<int>(by_len.size()) < L) extend();

        std::vector<RawPath> cols;
        for (int k = 0; k < L; ++k)
            for (const auto& p : by_len[k]) cols.push_back(p);
        std::sort(cols.begin(), cols.end(), path_less);
        std::map<std::pair<int, std::vector<int>>, int> col_id;
        for (size_t i = 0; i < cols.size(); ++i)
            col_id[{cols[i].src, cols[i].arrows}] = static_cast<int>(i);
        int ncols = static_cast<int>(cols.size());

        // span of truncated u * r * v over all relations and composable u, v
        SparseRref ideal(f);
        for (const auto& rel : spec.relations) {
            size_t min_len = SIZE_MAX;
            for (const auto& t : rel.terms) min_len = std::min(min_len, t.arrows.size());
            for (int lv = 0; lv + static_cast<int>(min_len) < L; ++lv) {
                for (const auto& v : by_len[lv]) {
                    if (v.tgt != rel.src) continue;
                    for (int lu = 0; lv + lu + static_cast<int>(min_len) < L; ++lu) {
                        for (const auto& u : by_len[lu]) {
                            if (u.src != rel.tgt) continue;
                            std::map<int, mpq_class> acc;
                            for (const auto& t : rel.terms) {
                                int tl = lv + static_cast<int>(t.arrows.size()) + lu;
                                if (tl >= L) continue;  // truncated away
                                std::vector<int> arr = v.arrows;
                                arr.insert(arr.end(), t.arrows.begin(), t.arrows.end());
                                arr.insert(arr.end(), u.arrows.begin(), u.arrows.end());
                                auto it = col_id.find({v.src, arr});
                                if (it == col_id.end()) throw internal_error("path enumeration hole");
                                acc[it->second] = f.add(acc.count(it->second) ? acc[it->second] : f.zero(),
                                                        f.reduce(t.coeff));
                            }
                            SRow row;
                            for (auto& [c, val] : acc)
                                if (!f.is_zero(val)) row.push_back({c, val});
                            if (!row.empty()) ideal.add_row(std::move(row));
                        }
                    }
                }
            }
        }
        ideal.finish();

        bool closed = true;
        for (const auto& p : by_len[L - 1])
            if (!ideal.contains_unit(col_id[{p.src, p.arrows}])) {
                closed = false;
                break;
            }
        if (!closed) continue;

        auto alg = std::make_shared<BoundAlgebra>();
        alg->quiver = q;
        alg->field = f;
        alg->name = spec.name;
        alg->max_path_len_ = L;

        std::vector<int> col_to_basis(ncols, -1);
        for (int c = 0; c < ncols; ++c) {
            if (ideal.is_pivot(c)) continue;
            col_to_basis[c] = static_cast<int>(alg->basis.size());
            alg->basis.push_back({cols[c].src, cols[c].tgt,
                                  static_cast<int>(cols[c].arrows.size()), cols[c].arrows});
        }
        alg->dim = static_cast<int>(alg->basis.size());
        if (alg->dim == 0) throw internal_error("algebra collapsed to zero");
        int maxlen = 0;
        for (const auto& b : alg->basis) maxlen = std::max(maxlen, b.len);
        alg->loewy_length = maxlen + 1;
        if (maxlen > L - 2) throw internal_error("basis path of maximal length survived");

        alg->path_residues_.assign(cols.size(), {});
        for (int c = 0; c < ncols; ++c) {
            if (!ideal.is_pivot(c)) {
                alg->path_residues_[c] = {{col_to_basis[c], f.one()}};
                continue;
            }
            const SRow& row = ideal.rows().at(c);
            for (size_t k = 1; k < row.size(); ++k) {
                if (col_to_basis[row[k].first] < 0)
                    throw internal_error("reduced row touches a pivot column");
                alg->path_residues_[c].push_back({col_to_basis[row[k].first], f.neg(row[k].second)});
            }
        }
        alg->path_id_ = std::move(col_id);

        alg->e_index.assign(q.nv, -1);
        alg->arrow_index.assign(q.arrows.size(), -1);
        for (int b = 0; b < alg->dim; ++b) {
            const auto& bp = alg->basis[b];
            if (bp.len == 0) alg->e_index[bp.src] = b;
            if (bp.len == 1) alg->arrow_index[bp.arrows[0]] = b;
        }
        for (int v = 0; v < q.nv; ++v)
            if (alg->e_index[v] < 0) throw internal_error("trivial path fell into the ideal");
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (alg->arrow_index[a] < 0) throw internal_error("arrow fell into the ideal");

        alg->left_mult.assign(alg->dim, Matrix(f, alg->dim, alg->dim));
        for (int i = 0; i < alg->dim; ++i) {
            const auto& bi = alg->basis[i];
            for (int j = 0; j < alg->dim; ++j) {
                const auto& bj = alg->basis[j];
                if (bj.tgt != bi.src) continue;
                std::vector<int> arr = bj.arrows;
                arr.insert(arr.end(), bi.arrows.begin(), bi.arrows.end());
                Matrix prod = alg->reduce_path(bj.src, arr);
                for (int k = 0; k < alg->dim; ++k) alg->left_mult[i].set(k, j, prod.at(0, k));
            }
        }

        // build-time invariants: associativity on basis triples, relations vanish
        auto basis_prod = [&](int i, int j) {
            std::vector<std::pair<int, mpq_class>> out;
            for (int k = 0; k < alg->dim; ++k)
                if (!f.is_zero(alg->left_mult[i].at(k, j))) out.push_back({k, alg->left_mult[i].at(k, j)});
            return out;
        };
        for (int i = 0; i < alg->dim; ++i)
            for (int j = 0; j < alg->dim; ++j) {
                auto pij = basis_prod(i, j);
                for (int k = 0; k < alg->dim; ++k) {
                    std::map<int, mpq_class> lhs, rhs;
                    for (const auto& [m, c] : pij)
                        for (const auto& [t, d] : basis_prod(m, k)) {
                            mpq_class v = f.add(lhs.count(t) ? lhs[t] : f.zero(), f.mul(c, d));
                            lhs[t] = v;
                        }
                    for (const auto& [m, c] : basis_prod(j, k))
                        for (const auto& [t, d] : basis_prod(i, m)) {
                            mpq_class v = f.add(rhs.count(t) ? rhs[t] : f.zero(), f.mul(c, d));
                            rhs[t] = v;
                        }
                    for (auto& [t, v] : lhs)
                        if (!f.is_zero(f.sub(v, rhs.count(t) ? rhs[t] : f.zero())))
                            throw internal_error("multiplication table not associative");
                    for (auto& [t, v] : rhs)
                        if (!f.is_zero(f.sub(v, lhs.count(t) ? lhs[t] : f.zero())))
                            throw internal_error("multiplication table not associative");
                }
            }
        for (const auto& rel : spec.relations) {
            Matrix acc(f, 1, alg->dim);
            for (const auto& t : rel.terms)
                acc = acc + alg->reduce_path(rel.src, t.arrows).scaled(f.reduce(t.coeff));
            if (!acc.is_zero()) throw internal_error("relation does not vanish in the quotient");
        }
        return alg;
    }
    throw input_error("length bound exceeded: ideal not admissible or bound too small");
}

Subspace radical_power_basis(const BoundAlgebra& a, int k) {
    if (k < 0) throw input_error("radical power must be >= 0");
    std::vector<int> keep;
    for (int b = 0; b < a.dim; ++b)
        if (a.basis[b].len >= k) keep.push_back(b);
    Matrix m(a.field, static_cast<int>(keep.size()), a.dim);
    for (size_t i = 0; i < keep.size(); ++i) m.set(static_cast<int>(i), keep[i], a.field.one());
    return Subspace::from_rows(m);
}

}  // namespace adr
