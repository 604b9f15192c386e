#include "mdr/motive.hpp"

#include <sstream>

namespace mdr {

std::string MotiveObject::label() const {
    switch (kind) {
        case Affine: return scheme.label;
        case AffineTimesLine: return scheme.label + "*A1";
        case ProjectiveLine: return "P1";
    }
    return "?";
}

MotiveComplex MotiveComplex::single(MotiveObject obj) {
    MotiveComplex m;
    m.terms[0] = {std::move(obj)};
    return m;
}

MotiveComplex MotiveComplex::tate_object() {
    MotiveComplex m;
    MotiveObject p1;
    p1.kind = MotiveObject::ProjectiveLine;
    MotiveObject pt;
    pt.kind = MotiveObject::Affine;
    pt.scheme = AffineCurveScheme::spec_q();
    m.terms[2] = {p1};
    m.terms[3] = {pt};
    MotiveEntry to_point;
    to_point.kind = MotiveEntry::ToPoint;
    m.diff[2] = {{to_point}};
    return m;
}

MotiveComplex MotiveComplex::line_cone(const AffineCurveScheme& x) {
    MotiveComplex m;
    MotiveObject xa;
    xa.kind = MotiveObject::AffineTimesLine;
    xa.scheme = x;
    MotiveObject xo;
    xo.kind = MotiveObject::Affine;
    xo.scheme = x;
    m.terms[0] = {xa};
    m.terms[1] = {xo};
    MotiveEntry proj;
    proj.kind = MotiveEntry::LineProjection;
    m.diff[0] = {{proj}};
    return m;
}

MotiveComplex MotiveComplex::mayer_vietoris_cone(const AffineCurveScheme& intersection,
                                                 const AffineCurveScheme& u,
                                                 const AffineCurveScheme& v,
                                                 const FiniteCorrespondence& ju,
                                                 const FiniteCorrespondence& jv) {
    MotiveComplex m;
    MotiveObject w;
    w.scheme = intersection;
    MotiveObject uo, vo;
    uo.scheme = u;
    vo.scheme = v;
    // the cone of [U cap V -> U + V] placed so the realization lines up with
    // the glued space in plain degrees
    m.terms[-1] = {w};
    m.terms[0] = {uo, vo};
    MotiveEntry eu, ev;
    eu.kind = MotiveEntry::Corr;
    eu.corr = ju;
    ev.kind = MotiveEntry::Corr;
    ev.corr = jv;
    ev.scale = -1;
    m.diff[-1] = {{eu}, {ev}};
    return m;
}

void MotiveComplex::check_d_squared() const {
    for (const auto& [d, rows] : diff) {
        auto next = diff.find(d + 1);
        if (next == diff.end()) continue;
        size_t mid = rows.size();
        size_t top = next->second.size();
        size_t bottom = rows.empty() ? 0 : rows[0].size();
        for (size_t i = 0; i < bottom; ++i)
            for (size_t k = 0; k < top; ++k) {
                std::optional<FiniteCorrespondence> acc;
                for (size_t j = 0; j < mid; ++j) {
                    const MotiveEntry& e1 = rows[j][i];
                    const MotiveEntry& e2 = next->second[k][j];
                    if (e1.kind == MotiveEntry::Zero || e2.kind == MotiveEntry::Zero) continue;
                    if (e1.kind != MotiveEntry::Corr || e2.kind != MotiveEntry::Corr)
                        fail(ErrKind::UnsupportedInput,
                             "d^2 check only composes correspondence entries");
                    auto comp = compose(e1.corr, e2.corr).scaled(e1.scale * e2.scale);
                    acc = acc ? (*acc + comp) : comp;
                }
                if (acc && !acc->is_zero())
                    fail(ErrKind::Precondition, "motive differentials do not square to zero");
            }
    }
}

namespace {

// A realized column: a bounded complex in vertical degrees with block
// bookkeeping for filtrations and weights.
struct Column {
    MotiveObject obj;
    BoundedComplex cx;
    std::optional<AffineModel> affine;
    std::optional<P1Model> p1;
    std::shared_ptr<ProductLineModel> product;
};

Column build_column(const MotiveObject& obj, long window) {
    Column col;
    col.obj = obj;
    switch (obj.kind) {
        case MotiveObject::Affine: {
            col.affine = build_affine_model(obj.scheme, window);
            col.cx = col.affine->complex();
            break;
        }
        case MotiveObject::ProjectiveLine: {
            LogDivisor empty;
            col.p1 = build_p1_model(empty, window, true);
            col.cx = col.p1->total();
            break;
        }
        case MotiveObject::AffineTimesLine: {
            col.product =
                std::make_shared<ProductLineModel>(build_product_line_model(obj.scheme, window));
            col.cx = col.product->tot.complex;
            break;
        }
    }
    return col;
}

// F^p coordinate subspace of C^q for a column: coordinates of the blocks
// whose de Rham form degree is at least p.
Subspace column_f_subspace(const Column& col, long q, long p) {
    long dim = col.cx.dim(q);
    auto full = [&]() {
        Subspace s;
        for (long i = 0; i < dim; ++i) {
            QVec v(static_cast<size_t>(dim), Rational(0));
            v[static_cast<size_t>(i)] = Rational(1);
            s.push_back(std::move(v));
        }
        return s;
    };
    if (p <= 0) return full();
    if (dim == 0) return {};
    if (col.obj.kind == MotiveObject::Affine) return (q >= p) ? full() : Subspace{};
    if (col.obj.kind == MotiveObject::ProjectiveLine) {
        Subspace s;
        for (long cp = 0; cp <= 1; ++cp) {
            long fq = q - cp;  // de Rham form degree of the (cp, fq) block
            if (fq < p) continue;
            if (!col.p1->has_block(cp, fq)) continue;
            long off = col.p1->block_offset(cp, fq);
            long bd = col.p1->block_dim(cp, fq);
            for (long i = 0; i < bd; ++i) {
                QVec v(static_cast<size_t>(dim), Rational(0));
                v[static_cast<size_t>(off + i)] = Rational(1);
                s.push_back(std::move(v));
            }
        }
        return s;
    }
    // product with the line: every block of total vertical degree q has form
    // degree q
    return (q >= p) ? full() : Subspace{};
}

// weight of a class component inside one column at vertical degree q
long column_weight(const Column& col, long q, const QVec& component) {
    bool nonzero = false;
    for (const auto& c : component) nonzero = nonzero || !c.is_zero();
    if (!nonzero) return -1;
    if (col.obj.kind == MotiveObject::Affine) {
        if (q == 0) return 0;
        El e;
        for (size_t i = 0; i < col.affine->form_basis.size(); ++i)
            e = e + col.affine->form_basis[i].scaled(RationalFunction(component[i]));
        QVec rv = col.affine->residue_vector(col.affine->field.reduce(e));
        for (const auto& r : rv)
            if (!r.is_zero()) return 2;
        return 1;
    }
    if (col.obj.kind == MotiveObject::ProjectiveLine) {
        if (q == 0) return 0;
        if (q >= 2) return 2;
        return col.p1->residues_nonzero(1, component) ? 2 : 1;
    }
    // product with the line: the weight rides on the X factor
    if (q == 0) return 0;
    if (q >= 2) return q;
    auto sol = col.product->pull1.solve(component);
    if (!sol.has_value()) return q;  // mixed class: conservative
    El e;
    for (size_t i = 0; i < col.product->base.form_basis.size(); ++i)
        e = e + col.product->base.form_basis[i].scaled(RationalFunction((*sol)[i]));
    QVec rv = col.product->base.residue_vector(col.product->base.field.reduce(e));
    for (const auto& r : rv)
        if (!r.is_zero()) return 2;
    return 1;
}

// Transfer matrix between two affine columns in vertical degree q
// (contravariant: maps the target term's model to the source term's).
QMat corr_matrix(const MotiveEntry& e, const Column& src_col, const Column& dst_col, long q) {
    const AffineModel& msrc = *src_col.affine;
    const AffineModel& mdst = *dst_col.affine;
    size_t rows = static_cast<size_t>(msrc.complex().dim(q));
    size_t cols = static_cast<size_t>(mdst.complex().dim(q));
    QMat out(rows, cols);
    if (e.kind == MotiveEntry::Zero) return out;
    require_invariant(e.kind == MotiveEntry::Corr, "unexpected entry kind for affine columns");
    Transfer tr(e.corr);
    const auto& basis = (q == 0) ? mdst.fun_basis : mdst.form_basis;
    for (size_t j = 0; j < basis.size(); ++j) {
        require_invariant(basis[j].degree() <= 0, "transfer source basis must be chart functions");
        RationalFunction h = basis[j].is_zero() ? RationalFunction(0) : basis[j][0];
        Form in = (q == 0) ? Form::function(El::constant(h)) : Form::dx(El::constant(h));
        Form outf = tr.apply(in);
        auto coords = (q == 0) ? msrc.fun_coords(outf.coeff) : msrc.form_coords(outf.coeff);
        if (!coords)
            fail(ErrKind::WindowExhausted, "transfer image escaped the window; enlarge --window");
        for (size_t i = 0; i < rows; ++i) out(i, j) = (*coords)[i] * Rational(e.scale);
    }
    return out;
}

}  // namespace

long RealizationResult::fdim(long n, long p) const {
    auto it = record.h.find(n);
    if (it == record.h.end()) return 0;
    long idx = p - f_shift;
    if (idx < 0) return it->second.dim;
    if (idx >= static_cast<long>(it->second.F.size())) return 0;
    return it->second.F[static_cast<size_t>(idx)];
}

long RealizationResult::wdim(long n, long m) const {
    auto it = record.h.find(n);
    if (it == record.h.end()) return 0;
    long idx = m - w_shift;
    if (idx < 0) return 0;
    if (idx >= static_cast<long>(it->second.W.size())) return it->second.dim;
    return it->second.W[static_cast<size_t>(idx)];
}

long RealizationResult::weight_of(long n) const {
    long d = dim(n);
    if (d == 0) return 0;
    for (long m = w_shift - 8; m <= w_shift + 8; ++m)
        if (wdim(n, m) == d) return m;
    return w_shift + 8;
}

long RealizationResult::hodge_degree_of(long n) const {
    long d = dim(n);
    if (d == 0) return 0;
    long best = f_shift - 8;
    for (long p = f_shift - 8; p <= f_shift + 8; ++p)
        if (fdim(n, p) == d) best = p;
    return best;
}

RealizationResult realize(const MotiveComplex& m, long window) {
    m.check_d_squared();
    RealizationResult out;
    if (m.terms.empty()) return out;

    std::map<long, std::vector<Column>> cols;
    for (const auto& [d, objs] : m.terms) {
        for (const auto& obj : objs) cols[d].push_back(build_column(obj, window));
        std::ostringstream os;
        os << "degree " << d << ":";
        for (const auto& obj : objs) os << " " << obj.label() << " (window " << window << ")";
        out.provenance.push_back(os.str());
    }

    // assemble the double complex: motive degree d sits at horizontal -d
    DoubleComplex dc;
    long qmax = 0;
    for (auto& [d, cs] : cols)
        for (auto& c : cs) qmax = std::max(qmax, c.cx.max_deg());
    for (auto& [d, cs] : cols)
        for (long q = 0; q <= qmax; ++q) {
            long total = 0;
            for (auto& c : cs) total += c.cx.dim(q);
            dc.dims[{-d, q}] = total;
        }
    // vertical differentials: block diagonal per column
    for (auto& [d, cs] : cols)
        for (long q = 0; q < qmax; ++q) {
            QMat dq(static_cast<size_t>(dc.dims[{-d, q + 1}]),
                    static_cast<size_t>(dc.dims[{-d, q}]));
            long roff = 0, coff = 0;
            for (auto& c : cs) {
                QMat dcq = c.cx.diff(q);
                for (size_t i = 0; i < dcq.rows(); ++i)
                    for (size_t j = 0; j < dcq.cols(); ++j)
                        dq(static_cast<size_t>(roff) + i, static_cast<size_t>(coff) + j) =
                            dcq(i, j);
                roff += c.cx.dim(q + 1);
                coff += c.cx.dim(q);
            }
            dc.dv[{-d, q}] = std::move(dq);
        }
    // horizontal differentials: transfers from column -(d+1) to -d
    for (const auto& [d, rows] : m.diff) {
        if (!cols.count(d) || !cols.count(d + 1)) continue;
        auto& src_cols = cols[d + 1];
        auto& dst_cols = cols[d];
        for (long q = 0; q <= qmax; ++q) {
            QMat h(static_cast<size_t>(dc.dims[{-d, q}]),
                   static_cast<size_t>(dc.dims[{-(d + 1), q}]));
            long roff = 0;
            for (size_t i = 0; i < dst_cols.size(); ++i) {
                long coff = 0;
                for (size_t j = 0; j < src_cols.size(); ++j) {
                    const MotiveEntry& entry = rows[j][i];
                    Column& sc = src_cols[j];
                    Column& tc = dst_cols[i];
                    if (entry.kind == MotiveEntry::Corr) {
                        QMat mtx = corr_matrix(entry, tc, sc, q);
                        for (size_t r = 0; r < mtx.rows(); ++r)
                            for (size_t c2 = 0; c2 < mtx.cols(); ++c2)
                                h(static_cast<size_t>(roff) + r, static_cast<size_t>(coff) + c2) =
                                    mtx(r, c2);
                    } else if (entry.kind == MotiveEntry::ToPoint) {
                        require_invariant(
                            sc.obj.kind == MotiveObject::Affine && sc.obj.scheme.vars.empty(),
                            "ToPoint entries need a point summand");
                        if (q == 0) {
                            QVec unit;
                            if (tc.obj.kind == MotiveObject::ProjectiveLine) {
                                unit = tc.p1->unit();
                            } else if (tc.obj.kind == MotiveObject::Affine) {
                                auto cc =
                                    tc.affine->fun_coords(El::constant(RationalFunction(1)));
                                require_invariant(cc.has_value(), "unit escaped the window");
                                unit = *cc;
                            } else {
                                fail(ErrKind::UnsupportedInput, "ToPoint into a product term");
                            }
                            for (size_t r = 0; r < unit.size(); ++r)
                                h(static_cast<size_t>(roff) + r, static_cast<size_t>(coff)) =
                                    unit[r] * Rational(entry.scale);
                        }
                    } else if (entry.kind == MotiveEntry::LineProjection) {
                        require_invariant(sc.obj.kind == MotiveObject::Affine &&
                                              tc.obj.kind == MotiveObject::AffineTimesLine,
                                          "LineProjection entries map X x A^1 -> X");
                        if (q <= 1) {
                            const QMat& pull = (q == 0) ? tc.product->pull0 : tc.product->pull1;
                            for (size_t r = 0; r < pull.rows(); ++r)
                                for (size_t c2 = 0; c2 < pull.cols(); ++c2)
                                    h(static_cast<size_t>(roff) + r,
                                      static_cast<size_t>(coff) + c2) =
                                        pull(r, c2) * Rational(entry.scale);
                        }
                    }
                    coff += sc.cx.dim(q);
                }
                roff += dst_cols[i].cx.dim(q);
            }
            dc.dh[{-(d + 1), q}] = std::move(h);
        }
    }

    TotalComplex tot = total_complex(dc);

    for (long n = tot.complex.min_deg(); n <= tot.complex.max_deg(); ++n) {
        if (tot.complex.dim(n) == 0) continue;
        long shifted_degree = n - m.shift;
        DegreeData data;
        auto reps = tot.complex.cohomology_reps(n);
        data.dim = static_cast<long>(reps.size());
        Subspace boundaries = tot.complex.coboundaries(n);
        for (long p = 0; p <= 2; ++p) {
            Subspace fsub;
            long dimn = tot.complex.dim(n);
            for (auto& [d, cs] : cols) {
                long q = n + d;
                if (!tot.offset.count({-d, q})) continue;
                long base_off = tot.offset.at({-d, q});
                long col_off = 0;
                for (auto& c : cs) {
                    Subspace local = column_f_subspace(c, q, p);
                    for (const auto& v : local) {
                        QVec big(static_cast<size_t>(dimn), Rational(0));
                        for (size_t i = 0; i < v.size(); ++i)
                            big[static_cast<size_t>(base_off + col_off) + i] = v[i];
                        fsub.push_back(std::move(big));
                    }
                    col_off += c.cx.dim(q);
                }
            }
            Subspace z = tot.complex.cocycles(n);
            Subspace zf = subspace_intersect(z, fsub, static_cast<size_t>(tot.complex.dim(n)));
            long fp = static_cast<long>(subspace_rank(subspace_sum(zf, boundaries))) -
                      static_cast<long>(subspace_rank(boundaries));
            data.F.push_back(fp);
        }
        std::vector<long> weights;
        for (const auto& r : reps) {
            long w = 0;
            for (auto& [d, cs] : cols) {
                long q = n + d;
                if (!tot.offset.count({-d, q})) continue;
                long base_off = tot.offset.at({-d, q});
                long col_off = 0;
                for (auto& c : cs) {
                    long bd = c.cx.dim(q);
                    QVec comp(static_cast<size_t>(bd), Rational(0));
                    for (long i = 0; i < bd; ++i)
                        comp[static_cast<size_t>(i)] =
                            r[static_cast<size_t>(base_off + col_off + i)];
                    w = std::max(w, column_weight(c, q, comp));
                    col_off += bd;
                }
            }
            weights.push_back(w);
            data.basis.push_back("class of weight " + std::to_string(w));
        }
        for (long mw = 0; mw <= 4; ++mw) {
            long cnt = 0;
            for (long w : weights)
                if (w <= mw) ++cnt;
            data.W.push_back(cnt);
        }
        out.record.h[shifted_degree] = std::move(data);
    }
    out.record.window = window;
    if (m.twist != 0) return tate_twist(out, m.twist);
    return out;
}

RealizationResult tate_twist(const RealizationResult& r, long n) {
    RealizationResult out = r;
    out.f_shift += n;
    out.w_shift += 2 * n;
    out.provenance.push_back("tate twist by " + std::to_string(n));
    return out;
}

TensorReport check_tensor(const AffineCurveScheme& x, const AffineCurveScheme& y, long window) {
    TensorReport rep;
    auto kn = kunneth(x, y, window);
    rep.dims_match = kn.dims_match;
    rep.products_independent = kn.products_independent;
    rep.product_dims = kn.product_dims;
    rep.hodge_adds = true;
    rep.weights_add = true;
    auto step = [](const CohomologyRecord& r, long n) {
        std::vector<std::pair<long, long>> out;
        auto it = r.h.find(n);
        if (it == r.h.end()) return out;
        const DegreeData& d = it->second;
        long prev = 0;
        for (long m = 0; m < static_cast<long>(d.W.size()); ++m) {
            for (long k = 0; k < d.W[static_cast<size_t>(m)] - prev; ++k)
                out.push_back({n, m});
            prev = d.W[static_cast<size_t>(m)];
        }
        return out;
    };
    auto hx = affine_cohomology(x, window);
    auto hy = affine_cohomology(y, window);
    for (long n = 0; n <= 2; ++n) {
        std::vector<std::pair<long, long>> gens;
        for (long p = 0; p <= n; ++p)
            for (auto& a : step(hx, p))
                for (auto& b : step(hy, n - p))
                    gens.push_back({a.first + b.first, a.second + b.second});
        std::sort(gens.begin(), gens.end());
        rep.generator_steps[n] = gens;
        long want = rep.product_dims.count(n) ? rep.product_dims[n] : 0;
        if (static_cast<long>(gens.size()) != want) {
            rep.hodge_adds = false;
            rep.weights_add = false;
        }
        for (auto& [p, w] : gens) {
            if (p != n) rep.hodge_adds = false;  // curve classes sit in full Hodge degree
            if (w < n || w > 2 * n) rep.weights_add = false;
        }
    }
    return rep;
}

bool check_homotopy_descent(const AffineCurveScheme& x, long window, std::string* why) {
    auto cone = MotiveComplex::line_cone(x);
    auto r = realize(cone, window);
    for (const auto& [n, d] : r.record.h) {
        if (d.dim != 0) {
            if (why)
                *why = "cone has H^" + std::to_string(n) + " of dimension " +
                       std::to_string(d.dim);
            return false;
        }
    }
    return true;
}

QMat transfer_h1_matrix(const FiniteCorrespondence& gamma, long window) {
    AffineModel msrc = build_affine_model(gamma.source, window);
    AffineModel mdst = build_affine_model(gamma.target, window);
    auto src_reps = msrc.complex().cohomology_reps(1);
    auto dst_reps = mdst.complex().cohomology_reps(1);
    Transfer tr(gamma);
    QMat out(src_reps.size(), dst_reps.size());
    Subspace b = msrc.complex().coboundaries(1);
    for (size_t j = 0; j < dst_reps.size(); ++j) {
        El e;
        for (size_t i = 0; i < mdst.form_basis.size(); ++i)
            e = e + mdst.form_basis[i].scaled(RationalFunction(dst_reps[j][i]));
        require_invariant(e.degree() <= 0, "H^1 representative must be a chart form");
        Form img = tr.apply(Form::dx(e));
        auto coords = msrc.form_coords(img.coeff);
        if (!coords) fail(ErrKind::WindowExhausted, "transfer image escaped the window");
        Subspace all = src_reps;
        all.insert(all.end(), b.begin(), b.end());
        QMat mm(coords->size(), all.size());
        for (size_t c = 0; c < all.size(); ++c)
            for (size_t r = 0; r < coords->size(); ++r) mm(r, c) = all[c][r];
        auto sol = mm.solve(*coords);
        require_invariant(sol.has_value(), "transfer image is not a cocycle class");
        for (size_t i = 0; i < src_reps.size(); ++i) out(i, j) = (*sol)[i];
    }
    return out;
}

}  // namespace mdr
