#include "foursym/tensors.hpp"

namespace foursym {

Sign metric_sign(Metric g) { return g == Metric::gplus ? Sign::plus : Sign::minus; }

Mat nijenhuis(const FourSym& fs, Sign s, const Mat& x, const Mat& y,
              const Lift& extra) {
  auto jhat = [&](const Mat& z) {
    Mat out = fs.j_apply(s, fs.proj_m(z));
    if (extra) out = out + extra(z);
    return out;
  };
  const Mat jx = jhat(x), jy = jhat(y);
  const Mat n = bracket(jx, jy) - jhat(bracket(jx, y)) - jhat(bracket(x, jy)) +
                jhat(jhat(bracket(x, y)));
  return fs.proj_m(n);
}

NijenhuisImage nijenhuis_image(const FourSym& fs, Sign s) {
  NijenhuisImage img;
  const auto& basis = fs.m_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Mat n = nijenhuis(fs, s, basis[i], basis[j]);
      if (n.is_zero()) continue;
      std::vector<Mat> probe = img.basis;
      probe.push_back(n);
      if (span_dim(probe) > img.basis.size()) img.basis.push_back(std::move(n));
    }
  img.dim = img.basis.size();
  img.maximal = img.dim == fs.dim_m();

  std::vector<Mat> structural;
  for (const Mat& p : fs.p_basis())
    for (const Mat& v : fs.v_basis()) structural.push_back(fs.proj_m(bracket(p, v)));
  img.dim_pv = span_dim(structural);
  std::vector<Mat> ppv;
  for (std::size_t i = 0; i < fs.p_basis().size(); ++i)
    for (std::size_t j = i + 1; j < fs.p_basis().size(); ++j)
      ppv.push_back(fs.proj_v(bracket(fs.p_basis()[i], fs.p_basis()[j])));
  img.dim_pp_v = span_dim(ppv);

  if (s == Sign::plus) {
    img.structural_match = img.dim == 0;
  } else {
    structural.insert(structural.end(), ppv.begin(), ppv.end());
    const std::size_t d_struct = span_dim(structural);
    std::vector<Mat> joint = structural;
    joint.insert(joint.end(), img.basis.begin(), img.basis.end());
    img.structural_match = d_struct == img.dim && span_dim(joint) == img.dim;
  }
  return img;
}

Mat lc_nabla(const FourSym& fs, Metric g, const Mat& a, const Mat& b) {
  const Mat av = fs.proj_v(a), ap = fs.proj_p(a);
  const Mat bv = fs.proj_v(b), bp = fs.proj_p(b);
  Mat val = bracket(ap, bp).scaled(Rat(1, 2));
  if (g == Metric::gplus) {
    val = val + bracket(av, bp);
  } else {
    val = val - bracket(av, bp) - bracket(bv, ap).scaled(2);
  }
  return fs.proj_m(val);
}

Mat chern_nabla(const FourSym& fs, const Mat& a, const Mat& b) {
  return fs.proj_m(bracket(fs.proj_m(a), b));
}

Mat chern_nabla_route2(const FourSym& fs, const Mat& a, const Mat& b) {
  const Mat t1 = lc_nabla(fs, Metric::gminus, a, b);
  const Mat t2 = fs.proj_m(bracket(a, b));
  const Mat t3 = fs.j_apply(
      Sign::minus, lc_nabla(fs, Metric::gminus, fs.j_apply(Sign::minus, b), a));
  return (t1 + t2 - t3).scaled(Rat(1, 2));
}

std::vector<Rat> CurvatureTable::value(std::size_t i, std::size_t j,
                                       std::size_t k) const {
  if (i == j) throw Error("CurvatureTable: diagonal pair requested");
  if (i < j) return stored(i, j, k);
  std::vector<Rat> out = stored(j, i, k);
  for (Rat& r : out) r = -r;
  return out;
}

namespace {

// type of a basis index inside m: v comes first, then p
bool is_v(const FourSym& fs, std::size_t i) { return i < fs.dim_v(); }

Mat specialized_value(const FourSym& fs, Conn c, const std::vector<std::vector<Mat>>& br,
                      std::size_t i, std::size_t j, std::size_t k) {
  const auto& e = fs.m_basis();
  const bool vi = is_v(fs, i), vj = is_v(fs, j), vk = is_v(fs, k);
  auto get = [&](std::size_t a, std::size_t b) {
    if (a == b) return Mat::zero(e[a].rows(), e[a].cols());
    return a < b ? br[a][b] : -br[b][a];
  };
  if (vi && vj) {
    const Mat base = bracket(br[i][j], e[k]);
    if (c == Conn::lc_gminus && !vk) return base.scaled(3);
    return -base;
  }
  if (vi && !vj) {
    // mixed pair (X, Y)
    if (c == Conn::chern_minus) return Mat::zero(e[k].rows(), e[k].cols());
    if (vk) {
      // R(X1, Y) X2
      Mat val = -bracket(br[i][j], e[k]);
      if (c == Conn::lc_gminus) val = val + bracket(get(i, k), e[j]).scaled(2);
      return val;
    }
    // R(X, Y1) Y2
    Mat val = bracket(br[i][j], e[k]).scaled(Rat(-1, 2));
    if (c == Conn::lc_gminus) val = val + bracket(get(i, k), e[j]);
    return val;
  }
  // both in p
  if (c == Conn::chern_minus) {
    const Mat h = (br[i][j] + fs.sigma(br[i][j])).scaled(Rat(1, 2));
    return -bracket(h, e[k]);
  }
  if (vk) {
    const Rat f = c == Conn::lc_gplus ? Rat(-1, 2) : Rat(-3, 2);
    return bracket(br[i][j], e[k]).scaled(f);
  }
  const Mat t1 = bracket(br[i][j], e[k]);
  const Mat t2 = bracket(fs.sigma(get(k, i)), e[j]);
  const Mat t3 = bracket(fs.sigma(get(j, k)), e[i]);
  const Mat t4 = bracket(fs.sigma(br[i][j]), e[k]);
  if (c == Conn::lc_gplus)
    return (-t1 + t2 + t3 - t4.scaled(2)).scaled(Rat(1, 4));
  return (t1.scaled(-7) - t2 - t3 + t4.scaled(2)).scaled(Rat(1, 4));
}

std::vector<std::vector<Mat>> bracket_table(const std::vector<Mat>& e) {
  std::vector<std::vector<Mat>> br(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    br[i].resize(e.size());
    for (std::size_t j = i + 1; j < e.size(); ++j) br[i][j] = bracket(e[i], e[j]);
  }
  return br;
}

}  // namespace

CurvatureTable curvature(const FourSym& fs, Conn c) {
  const std::size_t d = fs.dim_m();
  const auto br = bracket_table(fs.m_basis());
  CurvatureTable table;
  table.dim = d;
  table.entries.reserve(d * (d - 1) / 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        table.entries.push_back(fs.m_solver().coords_or_throw(
            fs.proj_m(specialized_value(fs, c, br, i, j, k))));
  return table;
}

CurvatureTable curvature_oracle(const FourSym& fs, Conn c) {
  const std::size_t d = fs.dim_m();
  const auto& e = fs.m_basis();
  const auto br = bracket_table(e);
  // Every term of the generic curvature formula is bilinear, so the nested
  // connection applications reduce to accumulations over coordinate tables:
  // nab[a][b] for the connection, pm[a][b] for proj_m of the bracket, and
  // bk[a][k] for proj_m [f_a, e_k] over the full algebra basis (the last
  // bracket term leaves m before projecting).
  std::vector<std::vector<std::vector<Rat>>> nab(d), pm(d);
  for (std::size_t a = 0; a < d; ++a) {
    nab[a].resize(d);
    pm[a].resize(d);
    for (std::size_t b = 0; b < d; ++b) {
      const Mat value = c == Conn::chern_minus
                            ? chern_nabla(fs, e[a], e[b])
                            : lc_nabla(fs,
                                       c == Conn::lc_gplus ? Metric::gplus
                                                           : Metric::gminus,
                                       e[a], e[b]);
      nab[a][b] = fs.m_solver().coords_or_throw(value);
      pm[a][b] = fs.m_solver().coords_or_throw(fs.proj_m(bracket(e[a], e[b])));
    }
  }
  const auto& alg = fs.algebra();
  const std::size_t gd = alg.dim();
  std::vector<std::vector<std::vector<Rat>>> bk(gd);
  for (std::size_t a = 0; a < gd; ++a) {
    bk[a].resize(d);
    for (std::size_t k = 0; k < d; ++k)
      bk[a][k] = fs.m_solver().coords_or_throw(fs.proj_m(bracket(alg.basis[a], e[k])));
  }

  CurvatureTable table;
  table.dim = d;
  table.entries.reserve(d * (d - 1) / 2 * d);
  std::vector<Rat> val(d);
  auto acc = [&](const Rat& s, const std::vector<Rat>& src) {
    if (s == 0) return;
    for (std::size_t t = 0; t < d; ++t)
      if (src[t] != 0) val[t] += s * src[t];
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const std::vector<Rat> cij = alg.solver.coords_or_throw(br[i][j]);
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(val.begin(), val.end(), Rat(0));
        if (c == Conn::chern_minus) {
          // the torsionful formula, all ten terms; cn(w, z) only sees
          // proj_m w, so pm coordinates feed every slot
          for (std::size_t t = 0; t < d; ++t) {
            acc(nab[j][k][t], nab[t][i]);        // cn(cn(e_j, e_k), e_i)
            acc(-nab[i][k][t], nab[t][j]);       // -cn(cn(e_i, e_k), e_j)
            acc(pm[i][j][t], nab[t][k]);         // cn([e_i, e_j], e_k)
            acc(pm[i][k][t], nab[t][j]);         // cn([e_i, e_k], e_j)
            acc(-pm[j][k][t], nab[t][i]);        // -cn([e_j, e_k], e_i)
            acc(nab[j][k][t], nab[i][t]);        // cn(e_i, cn(e_j, e_k))
            acc(-nab[i][k][t], nab[j][t]);       // -cn(e_j, cn(e_i, e_k))
            acc(pm[i][k][t], nab[j][t]);         // cn(e_j, proj[e_i, e_k])
            acc(-pm[j][k][t], nab[i][t]);        // -cn(e_i, proj[e_j, e_k])
          }
        } else {
          for (std::size_t t = 0; t < d; ++t) {
            acc(nab[k][j][t], nab[t][i]);        // nabla_{e_i} nabla(e_k, e_j)
            acc(-nab[k][i][t], nab[t][j]);
            acc(pm[i][j][t], nab[t][k]);         // nabla([e_i, e_j], e_k)
          }
        }
        for (std::size_t a = 0; a < gd; ++a)     // -proj [[e_i, e_j], e_k]
          acc(-cij[a], bk[a][k]);
        table.entries.push_back(val);
      }
    }
  return table;
}

TableComparison compare_tables(const CurvatureTable& a, const CurvatureTable& b) {
  TableComparison cmp;
  if (a.dim != b.dim || a.entries.size() != b.entries.size())
    throw Error("compare_tables: table shapes differ");
  for (std::size_t i = 0; i < a.dim && cmp.match; ++i)
    for (std::size_t j = i + 1; j < a.dim && cmp.match; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.stored(i, j, k) != b.stored(i, j, k)) {
          cmp.match = false;
          cmp.witness = std::make_tuple(i, j, k);
          break;
        }
  return cmp;
}

namespace {

Mat ricci_route_a(const FourSym& fs, const CurvatureTable& table) {
  const std::size_t d = fs.dim_m();
  Mat ric(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Rat s = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        if (i < j)
          s += table.stored(i, j, k)[j];
        else
          s -= table.stored(j, i, k)[j];
      }
      ric.at(i, k) = s;
    }
  return ric;
}

Rat ricci_route_b(const FourSym& fs, Metric g, std::size_t i, std::size_t k) {
  const auto& e = fs.m_basis();
  const bool vi = is_v(fs, i), vk = is_v(fs, k);
  if (vi != vk) return 0;
  if (vi) {
    auto op = [&](const Mat& z) { return bracket(e[k], bracket(e[i], z)); };
    return block_trace(fs, op, Subspace::v) + block_trace(fs, op, Subspace::p);
  }
  auto half_id_minus_sigma = [&](const Mat& z) {
    return (z - fs.sigma(z)).scaled(Rat(1, 2));
  };
  if (g == Metric::gplus) {
    auto op_v = [&](const Mat& z) {
      return half_id_minus_sigma(bracket(e[k], bracket(e[i], z))).scaled(Rat(1, 2));
    };
    auto op_p = [&](const Mat& z) {
      return (bracket(e[k], bracket(e[i], z)) +
              bracket(fs.sigma(bracket(e[k], e[i])), z) +
              bracket(e[i], fs.sigma(bracket(e[k], z))) +
              bracket(e[k], fs.sigma(bracket(e[i], z))).scaled(2))
          .scaled(Rat(1, 4));
    };
    return block_trace(fs, op_v, Subspace::v) + block_trace(fs, op_p, Subspace::p);
  }
  auto op_v = [&](const Mat& z) {
    return half_id_minus_sigma(bracket(e[k], bracket(e[i], z)).scaled(Rat(1, 2)) -
                               bracket(e[i], bracket(e[k], z)));
  };
  auto op_p = [&](const Mat& z) {
    return (bracket(e[k], bracket(e[i], z)).scaled(7) -
            bracket(fs.sigma(bracket(e[k], e[i])), z) -
            bracket(e[i], fs.sigma(bracket(e[k], z))) -
            bracket(e[k], fs.sigma(bracket(e[i], z))).scaled(2))
        .scaled(Rat(1, 4));
  };
  return block_trace(fs, op_v, Subspace::v) + block_trace(fs, op_p, Subspace::p);
}

}  // namespace

DualRouteGram ricci_gram(const FourSym& fs, Metric g, const CurvatureTable& table) {
  const std::size_t d = fs.dim_m();
  const Mat ric = ricci_route_a(fs, table);
  DualRouteGram out{GramForm(ric, FormKind::symmetric), true, std::nullopt};
  for (std::size_t i = 0; i < d && out.routes_agree; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (ricci_route_b(fs, g, i, k) != ric.at(i, k)) {
        out.routes_agree = false;
        out.witness = std::make_pair(i, k);
        break;
      }
  return out;
}

DualRouteGram chern_ricci_gram(const FourSym& fs, Sign s, const CurvatureTable& table) {
  const std::size_t d = fs.dim_m();
  const Mat jm = j_matrix(fs, s);
  // route (a): trace of J composed with the curvature endomorphism
  Mat cr(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rat t = 0;
      for (std::size_t k = 0; k < d; ++k) {
        const auto& w = table.stored(i, j, k);
        for (std::size_t l = 0; l < d; ++l)
          if (w[l] != 0) t += jm.at(k, l) * w[l];
      }
      cr.at(i, j) = t;
      cr.at(j, i) = -t;
    }
  DualRouteGram out{GramForm(cr, FormKind::antisymmetric), true, std::nullopt};

  if (s == Sign::plus) {
    // route (b): 2 Ric^{g+}(. , J+ .); the table must be the g+ one
    const Mat ric = ricci_route_a(fs, table);
    const Mat alt = (ric * jm).scaled(2);
    for (std::size_t i = 0; i < d && out.routes_agree; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (alt.at(i, j) != cr.at(i, j)) {
          out.routes_agree = false;
          out.witness = std::make_pair(i, j);
          break;
        }
    return out;
  }

  // route (b) for j-: partial traces of tau o ad and sigma o ad of the
  // g^sigma part of the bracket
  const auto& e = fs.m_basis();
  auto closed_form = [&](std::size_t i, std::size_t j) -> Rat {
    const bool vi = is_v(fs, i), vj = is_v(fs, j);
    if (vi != vj) return 0;
    Mat z = bracket(e[i], e[j]);
    if (!vi) z = (z + fs.sigma(z)).scaled(Rat(1, 2));
    auto op_v = [&](const Mat& c) {
      return bracket(fs.rho(), bracket(z, c)).scaled(Rat(1, 2));  // tau o ad z
    };
    auto op_p = [&](const Mat& c) { return fs.sigma(bracket(z, c)); };
    return block_trace(fs, op_v, Subspace::v) - block_trace(fs, op_p, Subspace::p);
  };
  for (std::size_t i = 0; i < d && out.routes_agree; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (closed_form(i, j) != cr.at(i, j)) {
        out.routes_agree = false;
        out.witness = std::make_pair(i, j);
        break;
      }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> hermitian_witness(
    const FourSym& fs, Sign s, const Mat& ric, const Mat& j) {
  (void)fs;
  (void)s;
  const Mat pulled = j.transposed() * ric * j;
  for (std::size_t a = 0; a < ric.rows(); ++a)
    for (std::size_t b = 0; b < ric.cols(); ++b)
      if (pulled.at(a, b) != ric.at(a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

Proportionality proportionality_check(const Mat& lhs, const Mat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error("proportionality_check: shape mismatch");
  Proportionality out;
  bool found = false;
  for (std::size_t i = 0; i < rhs.rows() && !found; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (rhs.at(i, j) != 0) {
        out.constant = lhs.at(i, j) / rhs.at(i, j);
        found = true;
        break;
      }
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs.at(i, j) != out.constant * rhs.at(i, j)) {
        out.witness = std::make_pair(i, j);
        return out;
      }
  out.proportional = true;
  return out;
}

Rat block_trace(const FourSym& fs, const std::function<Mat(const Mat&)>& op,
                Subspace sub) {
  const auto& basis = sub == Subspace::v ? fs.v_basis() : fs.p_basis();
  const auto& solver = sub == Subspace::v ? fs.v_solver() : fs.p_solver();
  Rat t = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto c = solver.coords(op(basis[i]));
    if (!c) throw Error("block_trace: operator leaves the subspace");
    t += (*c)[i];
  }
  return t;
}

}  // namespace foursym
