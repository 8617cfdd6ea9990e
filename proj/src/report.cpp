#include "foursym/report.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

namespace foursym {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

ordered_json flag_to_json(const Flag& f) {
  switch (f.state) {
    case Flag::State::pass: return "pass";
    case Flag::State::fail: return ordered_json{{"fail", f.detail}};
    case Flag::State::skipped: return ordered_json{{"skipped", f.detail}};
  }
  throw Error("flag_to_json: bad state");
}

Flag flag_from_json(const ordered_json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() != "pass") throw Error("parse_report: bad flag string");
    return Flag::pass();
  }
  if (v.is_object() && v.contains("fail")) return Flag::fail(v.at("fail").get<std::string>());
  if (v.is_object() && v.contains("skipped"))
    return Flag::skipped(v.at("skipped").get<std::string>());
  throw Error("parse_report: bad flag value");
}

ordered_json signature_to_json(const Signature& s) {
  return ordered_json{{"pos", s.positive}, {"neg", s.negative}, {"zero", s.zero}};
}

Signature signature_from_json(const ordered_json& v) {
  Signature s;
  s.positive = v.at("pos").get<std::size_t>();
  s.negative = v.at("neg").get<std::size_t>();
  s.zero = v.at("zero").get<std::size_t>();
  return s;
}

void set_constant(Flag& flag, std::optional<Rat>& slot, const Proportionality& p) {
  if (p.proportional) {
    flag = Flag::pass();
    slot = p.constant;
  } else {
    flag = Flag::fail("entry " + pair_str(p.witness->first, p.witness->second));
    slot.reset();
  }
}

}  // namespace

bool VerificationReport::all_passed() const {
  const Flag* flags[] = {&nondegenerate.omega,
                         &nondegenerate.gprime,
                         &nondegenerate.betav,
                         &nondegenerate.beta,
                         &nijenhuis.jplus_zero,
                         &verdicts.jplus_nijenhuis_zero,
                         &verdicts.maximal,
                         &verdicts.hermitian_plus,
                         &verdicts.hermitian_minus,
                         &verdicts.einstein_plus,
                         &verdicts.special_minus,
                         &verdicts.special_plus,
                         &verdicts.oracle_match,
                         &consistency.oracle_match,
                         &consistency.closedness,
                         &consistency.compatibility,
                         &consistency.lift_independence};
  for (const Flag* f : flags)
    if (f->failed()) return false;
  return true;
}

bool VerificationReport::operator==(const VerificationReport& o) const {
  // timing is informational and deliberately excluded
  return spec.family == o.spec.family && spec.k == o.spec.k && spec.n == o.spec.n &&
         spec.kprime == o.spec.kprime && dims == o.dims &&
         nondegenerate == o.nondegenerate && signatures == o.signatures &&
         nijenhuis == o.nijenhuis && verdicts == o.verdicts &&
         consistency == o.consistency;
}

VerificationReport run_verify(const FamilySpec& spec_in) {
  // revalidate so malformed hand-built specs fail as input errors
  const FamilySpec spec = FamilySpec::make(
      spec_in.family,
      family_uses_kprime(spec_in.family) ? spec_in.kprime : spec_in.k, spec_in.n);
  VerificationReport rep;
  rep.spec = spec;

  using clock = std::chrono::steady_clock;
  auto timed = [&rep](const char* phase, auto&& body) {
    const auto t0 = clock::now();
    body();
    rep.timing.emplace_back(phase, std::chrono::duration<double>(clock::now() - t0).count());
  };

  auto fail_everything = [&rep](const std::string& msg) {
    const Flag f = Flag::fail(msg);
    rep.nondegenerate = {f, f, f, f};
    rep.nijenhuis.jplus_zero = f;
    rep.verdicts.jplus_nijenhuis_zero = f;
    rep.verdicts.maximal = f;
    rep.verdicts.hermitian_plus = rep.verdicts.hermitian_minus = f;
    rep.verdicts.einstein_plus = rep.verdicts.special_minus = rep.verdicts.special_plus = f;
    rep.verdicts.oracle_match = f;
    rep.consistency = {f, f, f, f};
  };

  std::optional<FourSym> built;
  try {
    timed("construct", [&] { built.emplace(build_family(spec)); });
  } catch (const Error& e) {
    fail_everything(std::string("construction: ") + e.what());
    return rep;
  }
  const FourSym& fs = *built;
  rep.dims = {fs.algebra().dim(), fs.dim_gsigma(), fs.dim_v(), fs.dim_p(), fs.dim_m()};

  std::vector<std::string> route_mismatches;
  std::optional<Mat> omega_m, gplus_m;

  try {
    timed("forms", [&] {
      const NondegeneracyReport nd = nondegeneracy_report(fs);
      auto rank_flag = [](std::size_t rank, std::size_t dim) {
        return rank == dim ? Flag::pass()
                           : Flag::fail("rank " + std::to_string(rank) + " < dim " +
                                        std::to_string(dim));
      };
      rep.nondegenerate.omega = rank_flag(nd.rank_omega, nd.dim_m);
      rep.nondegenerate.gprime = rank_flag(nd.rank_trace_p, nd.dim_p);
      rep.nondegenerate.betav = fs.symmetric_mode()
                                    ? Flag::skipped("gsigma_m1 is zero")
                                    : rank_flag(nd.rank_trace_v, nd.dim_v);
      const GramForm beta = beta_gram(fs.algebra());
      rep.nondegenerate.beta = rank_flag(rank(beta.matrix), beta.dim());
      const GramForm gp = metric_gram(fs, Sign::plus);
      const GramForm gm = metric_gram(fs, Sign::minus);
      rep.signatures.gplus = gp.signature();
      rep.signatures.gminus = gm.signature();
      omega_m = omega_gram(fs).matrix;
      gplus_m = gp.matrix;
    });

    timed("nijenhuis", [&] {
      const auto& e = fs.m_basis();
      Flag plus_zero = Flag::pass();
      for (std::size_t i = 0; i < e.size() && plus_zero.passed(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
          if (!nijenhuis(fs, Sign::plus, e[i], e[j]).is_zero()) {
            plus_zero = Flag::fail("pair " + pair_str(i, j));
            break;
          }
      const NijenhuisImage im = nijenhuis_image(fs, Sign::minus);
      rep.nijenhuis = {plus_zero, im.dim, im.maximal, fs.symmetric_mode()};
      rep.verdicts.jplus_nijenhuis_zero = plus_zero;
      rep.verdicts.jminus_image_dim = im.dim;
      if (im.maximal)
        rep.verdicts.maximal = Flag::pass();
      else if (fs.symmetric_mode())
        rep.verdicts.maximal = Flag::skipped("symmetric mode: j- = j+ and the torsion vanishes");
      else
        rep.verdicts.maximal =
            Flag::fail("image dim " + std::to_string(im.dim) + " < dim m " +
                       std::to_string(fs.dim_m()));
      if (!im.structural_match)
        route_mismatches.push_back("nijenhuis image differs from its structural description");
    });

    CurvatureTable lc_plus;
    timed("levi-civita", [&] {
      lc_plus = curvature(fs, Conn::lc_gplus);
      const CurvatureTable lc_minus = curvature(fs, Conn::lc_gminus);
      for (auto [conn, table, name] :
           {std::tuple<Conn, const CurvatureTable*, const char*>{Conn::lc_gplus, &lc_plus, "g+"},
            {Conn::lc_gminus, &lc_minus, "g-"}}) {
        const TableComparison cmp = compare_tables(*table, curvature_oracle(fs, conn));
        if (!cmp.match)
          route_mismatches.push_back(std::string("curvature table ") + name +
                                     " differs from the oracle");
      }
      const DualRouteGram ric_plus = ricci_gram(fs, Metric::gplus, lc_plus);
      const DualRouteGram ric_minus = ricci_gram(fs, Metric::gminus, lc_minus);
      for (auto [r, name] : {std::pair<const DualRouteGram*, const char*>{&ric_plus, "g+"},
                             {&ric_minus, "g-"}})
        if (!r->routes_agree)
          route_mismatches.push_back(std::string("ricci routes disagree for ") + name);
      auto herm = [&](Sign s, const DualRouteGram& r) {
        const auto w = hermitian_witness(fs, s, r.gram.matrix, j_matrix(fs, s));
        return w ? Flag::fail("pair " + pair_str(w->first, w->second)) : Flag::pass();
      };
      rep.verdicts.hermitian_plus = herm(Sign::plus, ric_plus);
      rep.verdicts.hermitian_minus = herm(Sign::minus, ric_minus);
      if (rank(*gplus_m) < fs.dim_m()) {
        rep.verdicts.einstein_plus = Flag::skipped("g+ is degenerate");
        rep.verdicts.lambda.reset();
      } else {
        set_constant(rep.verdicts.einstein_plus, rep.verdicts.lambda,
                     proportionality_check(ric_plus.gram.matrix, *gplus_m));
      }
    });

    timed("chern", [&] {
      const CurvatureTable chern = curvature(fs, Conn::chern_minus);
      const TableComparison cmp = compare_tables(chern, curvature_oracle(fs, Conn::chern_minus));
      if (!cmp.match)
        route_mismatches.push_back("chern curvature table differs from the oracle");
      const auto& e = fs.m_basis();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
          if (chern_nabla(fs, e[i], e[j]) != chern_nabla_route2(fs, e[i], e[j])) {
            route_mismatches.push_back("chern connection differs from its metric derivation at " +
                                       pair_str(i, j));
            i = j = e.size() - 1;
          }
      const DualRouteGram cr_minus = chern_ricci_gram(fs, Sign::minus, chern);
      const DualRouteGram cr_plus = chern_ricci_gram(fs, Sign::plus, lc_plus);
      for (auto [r, name] : {std::pair<const DualRouteGram*, const char*>{&cr_minus, "j-"},
                             {&cr_plus, "j+"}})
        if (!r->routes_agree)
          route_mismatches.push_back(std::string("chern-ricci routes disagree for ") + name);
      if (rank(*omega_m) < fs.dim_m()) {
        rep.verdicts.special_minus = rep.verdicts.special_plus =
            Flag::skipped("omega is degenerate");
        rep.verdicts.c_minus.reset();
        rep.verdicts.c_plus.reset();
      } else {
        set_constant(rep.verdicts.special_minus, rep.verdicts.c_minus,
                     proportionality_check(cr_minus.gram.matrix, *omega_m));
        set_constant(rep.verdicts.special_plus, rep.verdicts.c_plus,
                     proportionality_check(cr_plus.gram.matrix, *omega_m));
      }
    });

    timed("consistency", [&] {
      rep.consistency.oracle_match = route_mismatches.empty()
                                         ? Flag::pass()
                                         : Flag::fail(route_mismatches.front());
      rep.verdicts.oracle_match = rep.consistency.oracle_match;
      const auto closed = closedness_witness(fs);
      rep.consistency.closedness =
          closed ? Flag::fail("triple (" + std::to_string(std::get<0>(*closed)) + ", " +
                              std::to_string(std::get<1>(*closed)) + ", " +
                              std::to_string(std::get<2>(*closed)) + ")")
                 : Flag::pass();
      rep.consistency.compatibility = Flag::pass();
      for (Sign s : {Sign::plus, Sign::minus})
        if (const auto w = compatibility_witness(fs, j_matrix(fs, s))) {
          rep.consistency.compatibility = Flag::fail(
              std::string(s == Sign::plus ? "j+" : "j-") + " pair " +
              pair_str(w->first, w->second));
          break;
        }
      // a fixed nonzero lift into g^sigma; torsion values must not move
      const auto& g = fs.gsigma_basis();
      Lift zeta;
      if (!g.empty())
        zeta = [&g](const Mat& z) {
          Mat out = g[0].scaled(z.at(0, 0) + 2 * z.at(0, z.cols() - 1));
          if (g.size() > 1) out = out + g[1].scaled(z.at(z.rows() - 1, 0));
          return out;
        };
      rep.consistency.lift_independence = Flag::pass();
      const auto& e = fs.m_basis();
      if (zeta)
        for (Sign s : {Sign::plus, Sign::minus})
          for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
              if (nijenhuis(fs, s, e[i], e[j], zeta) != nijenhuis(fs, s, e[i], e[j])) {
                rep.consistency.lift_independence = Flag::fail("pair " + pair_str(i, j));
                i = j = e.size();
                break;
              }
    });
  } catch (const Error& e) {
    fail_everything(std::string("pipeline: ") + e.what());
  }
  return rep;
}

std::vector<FamilySpec> sweep_specs(std::size_t max_ambient) {
  if (max_ambient < 3) throw Error("sweep: max_ambient must be at least 3");
  std::vector<FamilySpec> specs;
  for (Family f : all_families()) {
    const std::size_t k_step = family_uses_kprime(f) ? 2 : 1;
    for (std::size_t a = 1; a * k_step + 2 <= max_ambient; ++a)
      for (std::size_t n = 1; a * k_step + 2 * n <= max_ambient; ++n)
        specs.push_back(FamilySpec::make(f, a, n));
  }
  return specs;
}

std::vector<VerificationReport> sweep(std::size_t max_ambient) {
  std::vector<VerificationReport> out;
  for (const FamilySpec& s : sweep_specs(max_ambient)) out.push_back(run_verify(s));
  return out;
}

namespace {

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["spec"] = {{"family", family_name(r.spec.family)},
               {"k", r.spec.k},
               {"n", r.spec.n},
               {"kprime", r.spec.kprime}};
  j["dims"] = {{"g", r.dims.g},
               {"gsigma", r.dims.gsigma},
               {"gsigma_m1", r.dims.gsigma_m1},
               {"p", r.dims.p},
               {"m", r.dims.m}};
  j["nondegenerate"] = {{"omega", flag_to_json(r.nondegenerate.omega)},
                        {"gprime", flag_to_json(r.nondegenerate.gprime)},
                        {"betav", flag_to_json(r.nondegenerate.betav)},
                        {"beta", flag_to_json(r.nondegenerate.beta)}};
  j["signatures"] = {{"gplus", signature_to_json(r.signatures.gplus)},
                     {"gminus", signature_to_json(r.signatures.gminus)}};
  j["nijenhuis"] = {{"jplus_zero", flag_to_json(r.nijenhuis.jplus_zero)},
                    {"jminus_image_dim", r.nijenhuis.jminus_image_dim},
                    {"maximal", r.nijenhuis.maximal},
                    {"symmetric_mode", r.nijenhuis.symmetric_mode}};
  ordered_json v;
  v["jplus_nijenhuis_zero"] = flag_to_json(r.verdicts.jplus_nijenhuis_zero);
  v["jminus_image_dim"] = r.verdicts.jminus_image_dim;
  v["maximal"] = flag_to_json(r.verdicts.maximal);
  v["hermitian_plus"] = flag_to_json(r.verdicts.hermitian_plus);
  v["hermitian_minus"] = flag_to_json(r.verdicts.hermitian_minus);
  v["einstein_plus"] = flag_to_json(r.verdicts.einstein_plus);
  if (r.verdicts.lambda) v["lambda"] = rat_to_string(*r.verdicts.lambda);
  v["special_minus"] = flag_to_json(r.verdicts.special_minus);
  if (r.verdicts.c_minus) v["c_minus"] = rat_to_string(*r.verdicts.c_minus);
  v["special_plus"] = flag_to_json(r.verdicts.special_plus);
  if (r.verdicts.c_plus) v["c_plus"] = rat_to_string(*r.verdicts.c_plus);
  v["oracle_match"] = flag_to_json(r.verdicts.oracle_match);
  j["verdicts"] = std::move(v);
  j["consistency"] = {{"oracle_match", flag_to_json(r.consistency.oracle_match)},
                      {"closedness", flag_to_json(r.consistency.closedness)},
                      {"compatibility", flag_to_json(r.consistency.compatibility)},
                      {"lift_independence", flag_to_json(r.consistency.lift_independence)}};
  return j;
}

std::string flag_text(const Flag& f) {
  switch (f.state) {
    case Flag::State::pass: return "pass";
    case Flag::State::fail: return "FAIL [" + f.detail + "]";
    case Flag::State::skipped: return "skipped (" + f.detail + ")";
  }
  throw Error("flag_text: bad state");
}

}  // namespace

std::string emit(const VerificationReport& r, EmitFormat format) {
  if (format == EmitFormat::json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream os;
  auto sig = [](const Signature& s) {
    return "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ", " +
           std::to_string(s.zero) + ")";
  };
  os << r.spec.to_string() << "\n";
  os << "  dims              g=" << r.dims.g << " gsigma=" << r.dims.gsigma
     << " gsigma_m1=" << r.dims.gsigma_m1 << " p=" << r.dims.p << " m=" << r.dims.m << "\n";
  os << "  nondegenerate     omega=" << flag_text(r.nondegenerate.omega)
     << " gprime=" << flag_text(r.nondegenerate.gprime)
     << " betav=" << flag_text(r.nondegenerate.betav)
     << " beta=" << flag_text(r.nondegenerate.beta) << "\n";
  os << "  signatures        g+=" << sig(r.signatures.gplus)
     << " g-=" << sig(r.signatures.gminus) << "\n";
  os << "  nijenhuis         j+ zero=" << flag_text(r.nijenhuis.jplus_zero)
     << " image dim=" << r.nijenhuis.jminus_image_dim
     << " maximal=" << (r.nijenhuis.maximal ? "yes" : "no")
     << " symmetric mode=" << (r.nijenhuis.symmetric_mode ? "yes" : "no") << "\n";
  os << "  hermitian         g+=" << flag_text(r.verdicts.hermitian_plus)
     << " g-=" << flag_text(r.verdicts.hermitian_minus) << "\n";
  os << "  einstein (g+)     " << flag_text(r.verdicts.einstein_plus);
  if (r.verdicts.lambda) os << "  lambda=" << rat_to_string(*r.verdicts.lambda);
  os << "\n";
  os << "  special (j-)      " << flag_text(r.verdicts.special_minus);
  if (r.verdicts.c_minus) os << "  c=" << rat_to_string(*r.verdicts.c_minus);
  os << "\n";
  os << "  special (j+)      " << flag_text(r.verdicts.special_plus);
  if (r.verdicts.c_plus) os << "  c=" << rat_to_string(*r.verdicts.c_plus);
  os << "\n";
  os << "  consistency       oracle=" << flag_text(r.consistency.oracle_match)
     << " closed=" << flag_text(r.consistency.closedness)
     << " compatible=" << flag_text(r.consistency.compatibility)
     << " lift=" << flag_text(r.consistency.lift_independence) << "\n";
  for (const auto& [phase, secs] : r.timing) {
    os << "  time " << phase;
    for (std::size_t i = phase.size(); i < 13; ++i) os << ' ';
    os << secs << "s\n";
  }
  os << "  verdict           " << (r.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

VerificationReport parse_report(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("parse_report: ") + e.what());
  }
  try {
    VerificationReport r;
    const auto& s = j.at("spec");
    const auto fam = family_from_name(s.at("family").get<std::string>());
    if (!fam) throw Error("parse_report: unknown family");
    r.spec.family = *fam;
    r.spec.k = s.at("k").get<std::size_t>();
    r.spec.n = s.at("n").get<std::size_t>();
    r.spec.kprime = s.at("kprime").get<std::size_t>();
    const auto& d = j.at("dims");
    r.dims = {d.at("g").get<std::size_t>(), d.at("gsigma").get<std::size_t>(),
              d.at("gsigma_m1").get<std::size_t>(), d.at("p").get<std::size_t>(),
              d.at("m").get<std::size_t>()};
    const auto& nd = j.at("nondegenerate");
    r.nondegenerate = {flag_from_json(nd.at("omega")), flag_from_json(nd.at("gprime")),
                       flag_from_json(nd.at("betav")), flag_from_json(nd.at("beta"))};
    const auto& sg = j.at("signatures");
    r.signatures = {signature_from_json(sg.at("gplus")), signature_from_json(sg.at("gminus"))};
    const auto& nj = j.at("nijenhuis");
    r.nijenhuis = {flag_from_json(nj.at("jplus_zero")),
                   nj.at("jminus_image_dim").get<std::size_t>(),
                   nj.at("maximal").get<bool>(), nj.at("symmetric_mode").get<bool>()};
    const auto& v = j.at("verdicts");
    r.verdicts.jplus_nijenhuis_zero = flag_from_json(v.at("jplus_nijenhuis_zero"));
    r.verdicts.jminus_image_dim = v.at("jminus_image_dim").get<std::size_t>();
    r.verdicts.maximal = flag_from_json(v.at("maximal"));
    r.verdicts.hermitian_plus = flag_from_json(v.at("hermitian_plus"));
    r.verdicts.hermitian_minus = flag_from_json(v.at("hermitian_minus"));
    r.verdicts.einstein_plus = flag_from_json(v.at("einstein_plus"));
    if (v.contains("lambda")) r.verdicts.lambda = rat_from_string(v.at("lambda"));
    r.verdicts.special_minus = flag_from_json(v.at("special_minus"));
    if (v.contains("c_minus")) r.verdicts.c_minus = rat_from_string(v.at("c_minus"));
    r.verdicts.special_plus = flag_from_json(v.at("special_plus"));
    if (v.contains("c_plus")) r.verdicts.c_plus = rat_from_string(v.at("c_plus"));
    r.verdicts.oracle_match = flag_from_json(v.at("oracle_match"));
    const auto& c = j.at("consistency");
    r.consistency = {flag_from_json(c.at("oracle_match")), flag_from_json(c.at("closedness")),
                     flag_from_json(c.at("compatibility")),
                     flag_from_json(c.at("lift_independence"))};
    return r;
  } catch (const ordered_json::exception& e) {
    throw Error(std::string("parse_report: ") + e.what());
  }
}

std::string report_file_name(const FamilySpec& spec) {
  std::string name = family_name(spec.family);
  if (family_uses_kprime(spec.family))
    name += "_kp" + std::to_string(spec.kprime);
  else
    name += "_k" + std::to_string(spec.k);
  return name + "_n" + std::to_string(spec.n) + ".json";
}

}  // namespace foursym
