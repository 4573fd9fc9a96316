/* Copyright 2026 prymsym contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "prymsym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include "prymsym/milne.hpp"
#include "prymsym/scene.hpp"

namespace prymsym::cli {

namespace {

using scene::json;
using scene::Scene;

struct Globals {
  std::uint64_t budget = oracle::Options{}.budget;
  unsigned seed = 0;
  oracle::Options opt() const { return {budget}; }
};

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scene::scalar_to_json(x));
  return a;
}

json count_json(const oracle::CountReport& r) {
  return {{"curve", r.curve}, {"q", r.q},         {"points", r.points},
          {"genus", r.genus}, {"trace", r.trace}, {"weil_ok", r.weil_ok}};
}

json certs_json(const std::vector<Certificate>& cs) {
  json a = json::array();
  for (const auto& c : cs) {
    json j{{"q", c.q}, {"smooth", c.smooth}};
    if (c.witness) j["witness"] = vec_json(*c.witness);
    a.push_back(j);
  }
  return a;
}

bool type_in_1_to_6(SymmetroidType t) {
  return t == SymmetroidType::T1 || t == SymmetroidType::T2 || t == SymmetroidType::T3 || t == SymmetroidType::T4 ||
         t == SymmetroidType::T5 || t == SymmetroidType::T6;
}

// Target field of size q: F_p or the canonical F_{p^2}.
Field field_of_size(std::uint64_t q) {
  if (is_prime(q)) return Field::prime(q);
  for (std::uint64_t p = 3; p * p <= q; p += 2)
    if (p * p == q && is_prime(p)) return Field::canonical_extension(Field::prime(p));
  throw InputError("--q must be an odd prime or the square of one");
}

// Reduction into F_q. Scenes over Q(sqrt d) reduce by sending sqrt d to a
// square root of d in F_q, which needs q = p^2 when d is a nonsquare mod p.
Scene reduce_scene(const Scene& s, std::uint64_t q) {
  if (q == 0) return s;
  Field target = field_of_size(q);
  if (s.field == target) return s;
  try {
    if (s.field.kind() == FieldKind::Rationals ||
        (s.field.kind() == FieldKind::PrimeField && target.characteristic() == s.field.characteristic()))
      return scene::map_scene(s, target);
    if (s.field.is_extension() && s.field.base().kind() == FieldKind::Rationals) {
      auto r = s.field.ext_d().map_to(target).sqrt();
      if (!r) throw InputError("sqrt " + s.field.ext_d().to_string() + " is not in " + target.to_string());
      Scalar root = *r;
      return scene::map_scene(s, target, [&](const Scalar& x) { return x.re().map_to(target) + x.im().map_to(target) * root; });
    }
  } catch (const DomainError& e) {
    throw InputError(std::string("bad reduction: ") + e.what());
  }
  throw InputError("cannot reduce a scene over " + s.field.to_string() + " to " + target.to_string());
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- classify

json classify_json(const Symmetrization& a) {
  Classification c = classify(a);
  json j{{"type", to_string(c.type)}, {"partition", c.partition}, {"notes", c.notes}};
  j["plane"] = c.plane ? vec_json(*c.plane) : json(nullptr);
  json cert{{"gamma", scene::poly_to_json(gamma_cubic(a))}};
  AdjugateMap adj = adjugate_map(a);
  cert["annihilation"] = annihilation_holds(a, adj);
  if (type_in_1_to_6(c.type)) cert["gauss_identity"] = gauss_identity_holds(a, adj);
  j["certificates"] = cert;
  return j;
}

// ---- forward

struct ForwardOutput {
  ForwardResult fw;
  std::optional<RulingSplit> split;
  std::optional<KummerPencilData> pencil;
};

ForwardOutput run_forward(const Symmetrization& a, const ScalarSym& Q) {
  ForwardOutput o{forward(a, Q), std::nullopt, std::nullopt};
  if (!o.fw.hyperelliptic) {
    o.split = split_quadric(o.fw.qhat);
    o.pencil = pencil_conics(a, *o.split, o.fw.X);
  }
  return o;
}

Scene forward_scene(const Scene& in, const std::string& an, const std::string& qn, const ForwardOutput& o) {
  const ForwardResult& fw = o.fw;
  json meta{{"A", an}, {"Q", qn}, {"hyperelliptic", fw.hyperelliptic}, {"notes", fw.notes},
            {"certificates", certs_json(fw.certificates)}};
  Scene s = in;
  if (o.split && o.split->extended) s = scene::map_scene(in, o.split->field);
  if (!fw.hyperelliptic) {
    s.put("X", fw.X.map_to(s.field));
    s.put("K", *o.pencil);
    s.put("N", o.split->N);
    meta["reduced"] = fw.reduced;
    meta["lambda"] = scene::scalar_to_json(o.pencil->lambda);
    meta["split_extended"] = o.split->extended;
    meta["span_dim"] = o.pencil->span_dim;
  } else {
    s.put("Xbar", fw.conic);
    s.put("branch", fw.branch);
    if (fw.octic) s.put("octic", fw.octic->to_poly({"s", "t"}));
    meta["branch_reduced"] = fw.branch_reduced;
    if (fw.conic_point) meta["conic_point"] = vec_json(*fw.conic_point);
  }
  s.metadata["forward"] = meta;
  return s;
}

// ---- verify

struct Checks {
  json list = json::array();
  bool ok = true;
  void add(const std::string& name, const std::string& object, bool pass, const std::string& detail = "") {
    json j{{"check", name}, {"object", object}, {"ok", pass}};
    if (!detail.empty()) j["detail"] = detail;
    list.push_back(j);
    ok = ok && pass;
  }
  void skip(const std::string& name, const std::string& object, const std::string& why) {
    list.push_back({{"check", name}, {"object", object}, {"skipped", true}, {"detail", why}});
  }
  // Runs f; a thrown DomainError counts as a failure with its message.
  void guarded(const std::string& name, const std::string& object, const std::function<void()>& f) {
    try {
      f();
    } catch (const DomainError& e) {
      add(name, object, false, e.what());
    }
  }
};

std::vector<std::uint64_t> trace_primes(const Field& f) {
  if (f.kind() == FieldKind::Rationals) return {11, 13, 17, 19};
  if (f.kind() == FieldKind::PrimeField) return {f.characteristic()};
  return {};
}

void verify_pair(const Scene& s, const std::string& an, const std::string& qn, const json& expect, const Globals& g,
                 Checks& ch) {
  const Symmetrization& a = s.symmetrization(an);
  const ScalarSym& Q = s.quadric(qn);
  std::string obj = an + "," + qn;
  bool expect_smooth = expect.value("smooth", true);
  ForwardOutput o;
  try {
    o = run_forward(a, Q);
  } catch (const DomainError& e) {
    ch.add("forward", obj, false, e.what());
    return;
  }
  const ForwardResult& fw = o.fw;
  if (expect.contains("hyperelliptic")) ch.add("hyperelliptic", obj, fw.hyperelliptic == expect["hyperelliptic"].get<bool>());
  if (!fw.hyperelliptic) {
    HomogPoly second = pullback_quadric(fw.qhat, q_map(a));
    ch.add("pullback identity", obj, second == fw.X);
    ch.add("reduced", obj, fw.reduced);
  } else {
    ch.add("branch reduced", obj, fw.branch_reduced);
  }
  bool all_smooth = !fw.certificates.empty() &&
                    std::all_of(fw.certificates.begin(), fw.certificates.end(), [](const Certificate& c) { return c.smooth; });
  if (expect_smooth) {
    bool enough = s.field.kind() != FieldKind::Rationals || fw.certificates.size() >= 2;
    ch.add("smoothness certificates", obj, all_smooth && enough,
           std::to_string(fw.certificates.size()) + " certificate(s)");
  } else {
    ch.add("declared singular", obj, !all_smooth);
    return;
  }
  if (!fw.hyperelliptic) {
    ch.guarded("roundtrip", obj, [&] {
      auto rev = reverse_construct(fw.X.map_to(o.split->field), *o.pencil);
      auto rep = roundtrip_check(a, Q, *o.split, rev);
      ch.add("roundtrip", obj, rep.ok(), rev.self_residual ? "self-residual" : "");
      if (rev.self_residual)
        ch.add("reverse type", obj, classify(rev.A).type == SymmetroidType::DegenerateCone);
    });
  }
  for (std::uint64_t p : trace_primes(s.field)) {
    std::string name = "trace identity p=" + std::to_string(p);
    try {
      auto t = trace_identity(a, Q, p, g.opt());
      if (!t.C_smooth) {
        ch.skip(name, obj, "C singular mod p");
        continue;
      }
      ch.add(name, obj, t.holds() && t.conflicts == 0,
             "q=" + std::to_string(t.q) + " a(C~)=" + std::to_string(t.Ctilde.trace) + " a(C)=" +
                 std::to_string(t.C.trace) + " a(X)=" + std::to_string(t.X.trace));
    } catch (const DomainError& e) {
      ch.skip(name, obj, e.what());
    }
  }
}

json verify_scene(const Scene& s, const Globals& g, bool& ok) {
  Checks ch;
  json expect = s.metadata.value("expect", json::object());
  for (const auto& [name, o] : s.objects) {
    if (o.kind == "symmetrization") {
      const auto& a = std::get<Symmetrization>(o.value);
      AdjugateMap adj = adjugate_map(a);
      ch.add("annihilation", name, annihilation_holds(a, adj));
      Classification c = classify(a);
      if (type_in_1_to_6(c.type)) ch.add("gauss identity", name, gauss_identity_holds(a, adj));
      ch.guarded("minor relation", name, [&] { ch.add("minor relation", name, double_cover_minors(a).relation_holds); });
      if (expect.contains("types") && expect["types"].contains(name))
        ch.add("type", name, to_string(c.type) == expect["types"][name].get<std::string>(), to_string(c.type));
    } else if (o.kind == "pencil") {
      // parsing already checked c00 c11 - c01 c10 = lambda fX
      ch.add("pencil identity", name, true);
    }
  }
  if (s.metadata.contains("pair")) {
    const json& p = s.metadata["pair"];
    verify_pair(s, p.value("A", "A"), p.value("Q", "Q"), expect, g, ch);
  }
  ok = ok && ch.ok;
  return {{"ok", ch.ok}, {"checks", ch.list}};
}

// ---- milne

json member_json(const ReducibleMember& m) {
  return {{"field", scene::field_to_json(m.field)},
          {"lambda", scene::scalar_to_json(m.lambda)},
          {"mu", scene::scalar_to_json(m.mu)},
          {"H1", vec_json(m.H1)},
          {"H2", vec_json(m.H2)},
          {"non_reduced", m.non_reduced}};
}

const char* kind_name(LineKind k) {
  switch (k) {
    case LineKind::Generic:
      return "generic";
    case LineKind::BasePoint:
      return "base point";
    case LineKind::DoubleCover:
      return "double cover";
  }
  return "";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prymsym: cubic symmetroids, Prym varieties and bitangents"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "max points visited by one enumeration");
  app.add_option("--seed", g.seed, "seed for randomized choices");

  std::string file, object = "A", an = "A", qn = "Q", xn = "X", kn = "K", ln, curve, poly;
  std::uint64_t q = 0, p = 0;
  bool enumerate = false;

  auto* c_classify = app.add_subcommand("classify", "classify a symmetrization");
  c_classify->add_option("scene", file)->required();
  c_classify->add_option("--object", object);

  auto* c_hankel = app.add_subcommand("hankel", "Hankel symmetroid of a binary quartic");
  c_hankel->add_option("--poly", poly, "quartic in t, e.g. \"t^4-1\"")->required();
  c_hankel->add_option("--p", p, "work over F_p instead of Q");

  auto* c_forward = app.add_subcommand("forward", "genus-3 curve and pencil data from (A, Q)");
  c_forward->add_option("scene", file)->required();
  c_forward->add_option("--A", an);
  c_forward->add_option("--Q", qn);

  auto* c_reverse = app.add_subcommand("reverse", "symmetrization and quadric from (X, K)");
  c_reverse->add_option("scene", file)->required();
  c_reverse->add_option("--X", xn);
  c_reverse->add_option("--pencil", kn);

  auto* c_milne = app.add_subcommand("milne-tritangents", "tritangent pairs from bitangents");
  c_milne->add_option("scene", file)->required();
  c_milne->add_option("--A", an);
  c_milne->add_option("--Q", qn);
  auto* o_line = c_milne->add_option("--line", ln, "name of a line object");
  auto* o_enum = c_milne->add_flag("--enumerate", enumerate, "every line of P^2(F_q)");
  o_line->excludes(o_enum);
  c_milne->add_option("--q", q, "reduce to F_q first");

  auto* c_count = app.add_subcommand("count", "point count over F_q");
  c_count->add_option("scene", file)->required();
  c_count->add_option("--curve", curve, "C, Ctilde, or a form object")->required();
  c_count->add_option("--q", q);
  c_count->add_option("--A", an);
  c_count->add_option("--Q", qn);

  auto* c_bit = app.add_subcommand("bitangents", "bitangents of a plane quartic over F_q");
  c_bit->add_option("scene", file)->required();
  c_bit->add_option("--curve", curve)->required();
  c_bit->add_option("--q", q);

  auto* c_verify = app.add_subcommand("verify", "run the invariant suite on a scene or manifest");
  c_verify->add_option("scene", file)->required();

  std::vector<const char*> argv{"prymsym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (c_classify->parsed()) {
      Scene s = scene::read_scene_file(file);
      json j = classify_json(s.symmetrization(object));
      j["object"] = object;
      emit(out, j);
      return kOk;
    }
    if (c_hankel->parsed()) {
      Field f = p ? Field::prime(p) : Field::rationals();
      TermMap tm = parse_terms(poly, f, {"t"});
      Vec coeffs(5, Scalar::zero(f));
      for (const auto& [e, c] : tm) {
        if (e[0] > 4) throw InputError("--poly must have degree 4");
        coeffs[e[0]] = c;
      }
      Scene s;
      s.field = f;
      Symmetrization h = hankel_symmetroid(coeffs);
      s.put("H", h);
      s.metadata["hankel"] = {{"poly", poly}, {"type", to_string(classify(h).type)}};
      out << scene::write_scene(s);
      return kOk;
    }
    if (c_forward->parsed()) {
      Scene s = scene::read_scene_file(file);
      auto o = run_forward(s.symmetrization(an), s.quadric(qn));
      out << scene::write_scene(forward_scene(s, an, qn, o));
      return kOk;
    }
    if (c_reverse->parsed()) {
      Scene s = scene::read_scene_file(file);
      const KummerPencilData& k = s.pencil(kn);
      auto rev = reverse_construct(s.form(xn), k);
      json meta{{"X", xn},
                {"pencil", kn},
                {"span_dim", rev.span_dim},
                {"self_residual", rev.self_residual},
                {"type", to_string(classify(rev.A).type)}};
      auto fm = s.metadata.find("forward");
      if (fm != s.metadata.end() && s.objects.count("N")) {
        std::string a0 = fm->value("A", "A"), q0 = fm->value("Q", "Q");
        RulingSplit sp{s.field, s.matrix("N"), Scalar::one(s.field), false};
        auto rep = roundtrip_check(s.symmetrization(a0), s.quadric(q0), sp, rev);
        meta["roundtrip"] = rep.ok() ? "identity up to documented permutation" : "mismatch";
      }
      s.put("Arev", rev.A);
      s.put("Gammarev", rev.gamma);
      s.put_quadric("Qrev", rev.Q);
      s.metadata["reverse"] = meta;
      out << scene::write_scene(s);
      return kOk;
    }
    if (c_milne->parsed()) {
      Scene s = reduce_scene(scene::read_scene_file(file), q);
      const Symmetrization& a = s.symmetrization(an);
      const ScalarSym& Q = s.quadric(qn);
      if (!enumerate && ln.empty()) throw InputError("give --line or --enumerate");
      if (enumerate && !s.field.is_finite()) throw InputError("--enumerate needs a finite field (use --q)");
      ForwardResult fw = forward_general(a, Q);
      std::vector<Vec> lines = enumerate ? oracle::enumerate_points(s.field, 2, g.opt()) : std::vector<Vec>{s.line(ln)};
      json rows = json::array();
      std::size_t members = 0, bitangents = 0;
      HomogPoly qf = quadratic_form(Q, a.vars());
      for (const auto& m : milne_lines(a, Q, fw.X, lines)) {
        json r{{"line", vec_json(m.line)}, {"kind", kind_name(m.kind)}, {"notes", m.notes}};
        if (s.field.is_finite()) r["bitangent"] = m.bitangent;
        bitangents += m.bitangent;
        if (m.member) {
          ++members;
          r["member"] = member_json(*m.member);
          r["tritangents_ok"] = m.tritangents_ok;
          r["twisted_cubic_ok"] = m.twisted_cubic_ok;
          try {
            auto L = make_line(m.line);
            Vec lifted;
            for (const auto& x : L.line) lifted.push_back(x.map_to(m.member->field));
            auto T = twisted_cubic(a.map_to(m.member->field), make_line(lifted));
            auto cs = cubic_through_C_and_T(qf.map_to(m.member->field), gamma_cubic(a).map_to(m.member->field), T,
                                            g.seed);
            r["unique_cubic"] = cs.dimension == 1 && cs.proportional_to_gamma;
          } catch (const DomainError& e) {
            r["unique_cubic"] = false;
            r["notes"].push_back(e.what());
          }
        }
        if (enumerate && !m.member && !m.bitangent) continue;
        rows.push_back(r);
      }
      emit(out, {{"field", scene::field_to_json(s.field)},
                 {"lines_checked", lines.size()},
                 {"members", members},
                 {"bitangents", bitangents},
                 {"lines", rows}});
      return kOk;
    }
    if (c_count->parsed()) {
      Scene s = reduce_scene(scene::read_scene_file(file), q);
      if (!s.field.is_finite()) throw InputError("counting needs a finite field (use --q)");
      json j;
      if (curve == "C" || curve == "Ctilde") {
        const Symmetrization& a = s.symmetrization(an);
        HomogPoly qf = quadratic_form(s.quadric(qn), a.vars()), gam = gamma_cubic(a);
        if (curve == "C") {
          j = count_json(oracle::count_curve({qf, gam}, 4, "C", g.opt()));
        } else {
          auto m = double_cover_minors(a);
          auto r = oracle::count_double_cover(qf, gam, {m.m12, m.m13, m.m23}, g.opt());
          r.report.curve = "Ctilde";
          j = count_json(r.report);
          j["checked_pairs"] = r.checked_pairs;
          j["conflicts"] = r.conflicts;
        }
      } else {
        const HomogPoly& f = s.form(curve);
        if (f.nvars() == 2) {
          j = count_json(oracle::count_binary_cover(BinaryForm::from_poly(f), curve));
        } else if (f.nvars() == 3) {
          int d = f.degree();
          j = count_json(oracle::count_curve({f}, (d - 1) * (d - 2) / 2, curve, g.opt()));
        } else {
          throw InputError("count: " + curve + " is neither a plane curve nor a binary form");
        }
      }
      emit(out, j);
      return kOk;
    }
    if (c_bit->parsed()) {
      Scene s = reduce_scene(scene::read_scene_file(file), q);
      if (!s.field.is_finite()) throw InputError("bitangents needs a finite field (use --q)");
      const HomogPoly& f = s.form(curve);
      if (f.nvars() != 3 || f.degree() != 4) throw InputError("bitangents: " + curve + " is not a plane quartic");
      json lines = json::array();
      auto bit = oracle::enumerate_bitangents(f, g.opt());
      for (const auto& l : bit) lines.push_back(vec_json(l));
      emit(out, {{"curve", curve}, {"q", s.field.size()}, {"count", bit.size()}, {"lines", lines}});
      return kOk;
    }
    if (c_verify->parsed()) {
      std::ifstream in(file);
      if (!in) throw InputError("cannot open " + file);
      json top;
      try {
        top = json::parse(in);
      } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
      }
      bool ok = true;
      json report;
      if (top.contains("fixtures")) {
        auto dir = std::filesystem::path(file).parent_path();
        json scenes = json::object();
        for (const auto& entry : top["fixtures"]) {
          std::string rel = entry.get<std::string>();
          scenes[rel] = verify_scene(scene::read_scene_file((dir / rel).string()), g, ok);
        }
        report = {{"scenes", scenes}};
      } else {
        Scene sc;
        try {
          sc = scene::scene_from_json(top);
        } catch (const json::exception& e) {
          throw InputError(std::string("scene: ") + e.what());
        }
        report = verify_scene(sc, g, ok);
      }
      report["ok"] = ok;
      emit(out, report);
      return ok ? kOk : kVerificationFailed;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace prymsym::cli
