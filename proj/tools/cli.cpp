#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "spinsurg/classification.hpp"
#include "spinsurg/linalg.hpp"

namespace spinsurg::cli {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  if (trimmed(s).empty()) return parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trimmed(item));
  return parts;
}

mpz_class parse_mpz(const std::string& s) {
  try {
    return mpz_class(s);
  } catch (const std::invalid_argument&) {
    throw parse_error("not an integer: '" + s + "'");
  }
}

std::vector<mpz_class> parse_mpz_list(const std::string& csv) {
  std::vector<mpz_class> v;
  for (const auto& t : split(csv, ',')) v.push_back(parse_mpz(t));
  return v;
}

std::vector<QZ> parse_qz_list(const std::string& csv) {
  std::vector<QZ> v;
  for (const auto& t : split(csv, ',')) v.push_back(QZ::parse(t));
  return v;
}

// Rows separated by ';', entries by ','.
std::vector<std::vector<QZ>> parse_qz_rows(const std::string& text) {
  std::vector<std::vector<QZ>> rows;
  for (const auto& r : split(text, ';')) rows.push_back(parse_qz_list(r));
  return rows;
}

// ------------------------------------------------------------- rendering

ordered_json factors_json(const FiniteAbelianGroup& g) {
  auto a = ordered_json::array();
  for (const auto& d : g.factors()) a.push_back(d.get_str());
  return a;
}

ordered_json gram_json(const LinkingPairing& b) {
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < b.group().rank(); ++i) {
    auto row = ordered_json::array();
    for (std::size_t j = 0; j < b.group().rank(); ++j)
      row.push_back(b.gram_at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json qz_list_json(const std::vector<QZ>& v) {
  auto a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ordered_json bits_json(const GF2Vector& s) {
  auto a = ordered_json::array();
  for (auto b : s) a.push_back(static_cast<int>(b));
  return a;
}

std::string bits_str(const ordered_json& bits) {
  std::string s = "[";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(bits[i].get<int>());
  }
  return s + "]";
}

// Right-aligned matrix of strings, one indented line per row.
void print_string_matrix(const ordered_json& rows, std::ostream& os,
                         const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j >= width.size()) width.resize(j + 1, 0);
      width[j] = std::max(width[j], row[j].get<std::string>().size());
    }
  for (const auto& row : rows) {
    os << indent;
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto s = row[j].get<std::string>();
      os << std::string(width[j] - s.size(), ' ') << s;
      if (j + 1 < row.size()) os << "  ";
    }
    os << "\n";
  }
}

// ---------------------------------------------------------------- spins

ordered_json cmd_spins(const std::string& path) {
  PresentationFile f = load_presentation(path);
  auto spins = spin_structures(f.matrix);
  ordered_json r;
  r["command"] = "spins";
  r["file"] = path;
  if (f.name) r["name"] = *f.name;
  r["components"] = f.matrix.dim();
  r["count"] = spins.size();
  auto list = ordered_json::array();
  for (const auto& s : spins) list.push_back(bits_json(s));
  r["spins"] = std::move(list);
  return r;
}

void print_spins(const ordered_json& r, std::ostream& os) {
  os << r.value("name", r["file"].get<std::string>()) << ": "
     << r["components"].get<std::size_t>() << " components, "
     << r["count"].get<std::size_t>() << " spin structures\n";
  for (const auto& s : r["spins"]) os << "  " << bits_str(s) << "\n";
}

// ----------------------------------------------------------- invariants

ordered_json cmd_invariants(const std::string& path) {
  PresentationFile f = load_presentation(path);
  auto mi = manifold_invariants(f.matrix);
  ordered_json r;
  r["command"] = "invariants";
  r["file"] = path;
  if (f.name) r["name"] = *f.name;
  r["betti1"] = mi.betti1;
  r["torsion"] = factors_json(mi.pairing.group());
  r["torsion_order"] = mi.pairing.group().order().get_str();
  r["linking_gram"] = gram_json(mi.pairing);
  if (f.spin) {
    auto si = spin_invariants(f.presentation());
    ordered_json sj;
    sj["vector"] = bits_json(*f.spin);
    sj["phi_gen"] = qz_list_json(si.phi.qgen());
    sj["gauss_brown"] = gauss_brown(si.phi).str();
    sj["rochlin_mod8"] = si.rochlin_mod8;
    r["spin"] = std::move(sj);
  } else {
    r["spin"] = nullptr;
  }
  r["derivation"] = {
      {"pairing", "torsion pairing presented by the negated linking matrix"},
      {"phi", "quadratic refinement at the Wu class of the spin vector"},
      {"rochlin_mod8", "signature(B) - s^T B s, reduced mod 8"}};
  return r;
}

void print_invariants(const ordered_json& r, std::ostream& os) {
  os << r.value("name", r["file"].get<std::string>()) << "\n";
  os << "  betti1:  " << r["betti1"].get<std::size_t>() << "\n";
  std::string tor = "trivial";
  if (!r["torsion"].empty()) {
    tor.clear();
    for (const auto& d : r["torsion"]) {
      if (!tor.empty()) tor += " x ";
      tor += "Z" + d.get<std::string>();
    }
  }
  os << "  torsion: " << tor << " (order " << r["torsion_order"].get<std::string>()
     << ")\n";
  if (!r["linking_gram"].empty()) {
    os << "  linking form on generators:\n";
    print_string_matrix(r["linking_gram"], os, "    ");
  }
  if (r["spin"].is_null()) {
    os << "  no spin field: unspun report\n";
    return;
  }
  const auto& s = r["spin"];
  os << "  spin vector: " << bits_str(s["vector"]) << "\n";
  if (!s["phi_gen"].empty()) {
    os << "  phi on generators: ";
    for (std::size_t i = 0; i < s["phi_gen"].size(); ++i)
      os << (i ? ", " : "") << s["phi_gen"][i].get<std::string>();
    os << "\n";
  }
  os << "  Gauss-Brown(phi): " << s["gauss_brown"].get<std::string>() << "\n";
  os << "  Rochlin mod 8:    " << s["rochlin_mod8"].get<int>() << "\n";
}

// ---------------------------------------------------------------- equiv

ordered_json cmd_equiv(const std::string& mode, const std::string& pa,
                       const std::string& pb) {
  PresentationFile fa = load_presentation(pa);
  PresentationFile fb = load_presentation(pb);
  ordered_json r;
  r["command"] = "equiv";
  r["mode"] = mode;
  r["left"] = pa;
  r["right"] = pb;
  if (mode == "spin") {
    auto a = fa.presentation();
    auto b = fb.presentation();
    auto sa = spin_invariants(a);
    auto sb = spin_invariants(b);
    r["betti1"] = {sa.betti1, sb.betti1};
    r["torsion"] = {factors_json(sa.phi.group()), factors_json(sb.phi.group())};
    r["rochlin_mod8"] = {sa.rochlin_mod8, sb.rochlin_mod8};
    r["pairing_isomorphic"] =
        pairing_iso(sa.phi.pairing(), sb.phi.pairing());
    r["quadratic_isomorphic"] = quadratic_iso(sa.phi, sb.phi);
    r["equivalent"] = ys_equivalent(a, b);
  } else if (mode == "unspun") {
    auto ma = manifold_invariants(fa.matrix);
    auto mb = manifold_invariants(fb.matrix);
    r["betti1"] = {ma.betti1, mb.betti1};
    r["torsion"] = {factors_json(ma.pairing.group()),
                    factors_json(mb.pairing.group())};
    r["pairing_isomorphic"] = pairing_iso(ma.pairing, mb.pairing);
    r["equivalent"] = y_equivalent(fa.matrix, fb.matrix);
  } else {  // stable-even
    bool verdict = stably_equivalent_even(fa.matrix, fb.matrix);
    std::size_t n_a = fa.matrix.dim();
    std::size_t n_b = fb.matrix.dim();
    auto qa = presented_quadratic(
        fa.matrix, WuClass::from_longs(std::vector<long>(n_a, 0)));
    auto qb = presented_quadratic(
        fb.matrix, WuClass::from_longs(std::vector<long>(n_b, 0)));
    r["kernel_rank"] = {kernel_rank(fa.matrix), kernel_rank(fb.matrix)};
    r["torsion"] = {factors_json(qa.group()), factors_json(qb.group())};
    r["discriminant_isomorphic"] = quadratic_iso(qa, qb);
    r["equivalent"] = verdict;
  }
  return r;
}

void print_equiv(const ordered_json& r, std::ostream& os) {
  auto pair_line = [&](const char* label, const ordered_json& p) {
    os << "  " << label << p[0].dump() << " vs " << p[1].dump() << "\n";
  };
  os << "equiv (" << r["mode"].get<std::string>() << "): "
     << r["left"].get<std::string>() << " vs " << r["right"].get<std::string>()
     << "\n";
  auto tor_str = [](const ordered_json& t) {
    if (t.empty()) return std::string("trivial");
    std::string s;
    for (const auto& d : t) {
      if (!s.empty()) s += " x ";
      s += "Z" + d.get<std::string>();
    }
    return s;
  };
  if (r.contains("betti1")) pair_line("betti1:        ", r["betti1"]);
  if (r.contains("kernel_rank")) pair_line("kernel rank:   ", r["kernel_rank"]);
  os << "  torsion:       " << tor_str(r["torsion"][0]) << " vs "
     << tor_str(r["torsion"][1]) << "\n";
  if (r.contains("rochlin_mod8")) pair_line("Rochlin mod 8: ", r["rochlin_mod8"]);
  if (r.contains("pairing_isomorphic"))
    os << "  pairing classes:   "
       << (r["pairing_isomorphic"].get<bool>() ? "isomorphic" : "different")
       << "\n";
  if (r.contains("quadratic_isomorphic"))
    os << "  quadratic classes: "
       << (r["quadratic_isomorphic"].get<bool>() ? "isomorphic" : "different")
       << "\n";
  if (r.contains("discriminant_isomorphic"))
    os << "  discriminant forms: "
       << (r["discriminant_isomorphic"].get<bool>() ? "isomorphic"
                                                    : "different")
       << "\n";
  os << "equivalent: " << (r["equivalent"].get<bool>() ? "yes" : "no") << "\n";
}

// ----------------------------------------------------------------- move

struct MoveArgs {
  std::string kind;  // y | blow-up | blow-down | slide | stab-h | stab-gamma8
  std::string linkings_csv;
  std::string framing = "0";
  int sign = 0;
  std::size_t index = 0;
  std::size_t component = 0;
  std::size_t over = 0;
};

ordered_json cmd_move(const std::string& path, const MoveArgs& mv) {
  PresentationFile f = load_presentation(path);
  SpinPresentation p = f.presentation();
  SpinPresentation q;
  if (mv.kind == "y") {
    q = y_surgery(p, parse_mpz_list(mv.linkings_csv), parse_mpz(mv.framing));
  } else if (mv.kind == "blow-up") {
    q = blow_up(p, mv.sign);
  } else if (mv.kind == "blow-down") {
    q = blow_down(p, mv.index);
  } else if (mv.kind == "slide") {
    q = handle_slide(p, mv.component, mv.over, mv.sign);
  } else if (mv.kind == "stab-h") {
    q = stabilize_H(p);
  } else {
    q = stabilize_Gamma8(p);
  }
  PresentationFile out;
  if (f.name) out.name = *f.name + " +" + mv.kind;
  out.matrix = q.matrix();
  out.spin = q.spin();
  return ordered_json::parse(presentation_to_json(out));
}

// -------------------------------------------------------------- classify

ordered_json classify_pairing(const LinkingPairing& b,
                              const std::optional<QuadraticForm>& q) {
  ordered_json r;
  r["factors"] = factors_json(b.group());
  r["order"] = b.group().order().get_str();
  auto kernel = pairing_kernel(b);
  r["nondegenerate"] = kernel.empty();
  if (!kernel.empty()) {
    r["kernel_rank"] = kernel.size();
    return r;
  }
  auto primary = ordered_json::array();
  for (const auto& [p, part] : p_primary_decomposition(b)) {
    ordered_json pj;
    pj["prime"] = p.get_str();
    pj["factors"] = factors_json(part.group());
    if (p == 2) {
      auto kk = kk_invariants(part);
      auto levels = ordered_json::array();
      for (std::size_t k = 0; k < kk.levels.size(); ++k)
        levels.push_back({{"level", k + 1},
                          {"rank", kk.levels[k].rank},
                          {"sigma", kk.levels[k].sigma.str()}});
      pj["level_table"] = std::move(levels);
    } else {
      pj["gram"] = gram_json(part);
    }
    primary.push_back(std::move(pj));
  }
  r["primary"] = std::move(primary);
  if (q) {
    r["quadratic"] = {{"qgen", qz_list_json(q->qgen())},
                      {"gauss_brown", gauss_brown(*q).str()}};
  }
  r["derivation"] = {
      {"level_table", "snapped Gauss sums of the 2-power rescaled pairing"},
      {"odd_parts", "reported by gram; compare with 'equiv' for isomorphism"}};
  return r;
}

ordered_json cmd_classify_file(const std::string& path) {
  PresentationFile f = load_presentation(path);
  auto mi = manifold_invariants(f.matrix);
  std::optional<QuadraticForm> q;
  if (f.spin) q = spin_invariants(f.presentation()).phi;
  ordered_json r;
  r["command"] = "classify";
  r["source"] = path;
  if (f.name) r["name"] = *f.name;
  r.update(classify_pairing(mi.pairing, q));
  return r;
}

ordered_json cmd_classify_direct(const std::string& group_csv,
                                 const std::string& gram_text,
                                 const std::string& qgen_csv) {
  FiniteAbelianGroup g(parse_mpz_list(group_csv));
  LinkingPairing b(g, parse_qz_rows(gram_text));
  std::optional<QuadraticForm> q;
  if (!trimmed(qgen_csv).empty()) q = QuadraticForm(parse_qz_list(qgen_csv), b);
  ordered_json r;
  r["command"] = "classify";
  r["source"] = "direct";
  r.update(classify_pairing(b, q));
  return r;
}

void print_classify(const ordered_json& r, std::ostream& os) {
  std::string grp = "trivial";
  if (!r["factors"].empty()) {
    grp.clear();
    for (const auto& d : r["factors"]) {
      if (!grp.empty()) grp += " x ";
      grp += "Z" + d.get<std::string>();
    }
  }
  os << "pairing on " << grp << " (order " << r["order"].get<std::string>()
     << ")\n";
  if (!r["nondegenerate"].get<bool>()) {
    os << "  degenerate: kernel rank " << r["kernel_rank"].get<std::size_t>()
       << "; classification applies to nondegenerate pairings\n";
    return;
  }
  for (const auto& pj : r["primary"]) {
    os << "  " << pj["prime"].get<std::string>() << "-part: ";
    std::string part = "trivial";
    if (!pj["factors"].empty()) {
      part.clear();
      for (const auto& d : pj["factors"]) {
        if (!part.empty()) part += " x ";
        part += "Z" + d.get<std::string>();
      }
    }
    os << part << "\n";
    if (pj.contains("level_table")) {
      os << "    level (rank, sigma):";
      for (const auto& lvl : pj["level_table"])
        os << " " << lvl["level"].get<std::size_t>() << ":("
           << lvl["rank"].get<std::size_t>() << ","
           << lvl["sigma"].get<std::string>() << ")";
      os << "\n";
    } else {
      os << "    gram:\n";
      print_string_matrix(pj["gram"], os, "      ");
    }
  }
  if (r.contains("quadratic")) {
    os << "  quadratic refinement: qgen";
    for (const auto& x : r["quadratic"]["qgen"])
      os << " " << x.get<std::string>();
    os << ", Gauss-Brown " << r["quadratic"]["gauss_brown"].get<std::string>()
       << "\n";
  }
}

void emit(const ordered_json& r, bool json_mode,
          void (*human)(const ordered_json&, std::ostream&), std::ostream& out) {
  if (json_mode)
    out << r.dump(2) << "\n";
  else
    human(r, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"spin 3-manifold invariants from framed-link linking matrices"};
  app.name("spinsurg");
  app.require_subcommand(1);

  bool json_mode = false;
  std::string file_a, file_b, out_path;
  std::string mode = "spin";
  std::string group_csv, gram_text, qgen_csv;
  MoveArgs mv;

  auto* sp = app.add_subcommand("spins", "list the spin structures");
  sp->add_option("file", file_a, "presentation file")->required();
  sp->add_flag("--json", json_mode, "machine-readable output");

  auto* inv =
      app.add_subcommand("invariants", "Betti number, torsion linking form, "
                                       "spin refinement, Rochlin invariant");
  inv->add_option("file", file_a, "presentation file")->required();
  inv->add_flag("--json", json_mode, "machine-readable output");

  auto* eq = app.add_subcommand("equiv", "decide equivalence of two files");
  eq->add_option("left", file_a, "presentation file")->required();
  eq->add_option("right", file_b, "presentation file")->required();
  eq->add_option("--mode", mode, "spin | unspun | stable-even")
      ->check(CLI::IsMember({"spin", "unspun", "stable-even"}));
  eq->add_flag("--json", json_mode, "machine-readable output");

  auto* mvc = app.add_subcommand(
      "move", "apply a calculus move, emit the new presentation");
  mvc->add_option("file", file_a, "presentation file")->required();
  mvc->add_option("--output", out_path, "write the result to this file");
  mvc->add_flag("--json", json_mode, "no-op: move output is always JSON");
  mvc->require_subcommand(1);
  auto* mv_y = mvc->add_subcommand("y", "border move (two new components)");
  mv_y->add_option("--linkings", mv.linkings_csv,
                   "comma-separated, one per existing component");
  mv_y->add_option("--framing", mv.framing, "framing of the first new leaf");
  auto* mv_up = mvc->add_subcommand("blow-up", "add a (+-1)-framed unknot");
  mv_up->add_option("--sign", mv.sign, "+1 or -1")->required();
  auto* mv_dn = mvc->add_subcommand("blow-down", "remove such a component");
  mv_dn->add_option("--index", mv.index, "0-based component index")->required();
  auto* mv_sl = mvc->add_subcommand("slide", "slide one component over another");
  mv_sl->add_option("--component", mv.component, "component being slid")
      ->required();
  mv_sl->add_option("--over", mv.over, "component slid over")->required();
  mv_sl->add_option("--sign", mv.sign, "+1 or -1")->required();
  auto* mv_sh =
      mvc->add_subcommand("stab-h", "direct sum with the hyperbolic block");
  auto* mv_sg = mvc->add_subcommand("stab-gamma8",
                                    "direct sum with the signature-8 block");

  auto* cl = app.add_subcommand(
      "classify", "primary decomposition and level table of a pairing");
  cl->add_option("file", file_a, "presentation file (torsion pairing)");
  cl->add_option("--group", group_csv, "invariant factors, e.g. 2,4");
  cl->add_option("--gram", gram_text, "rows ';'-separated, e.g. 1/2,0;0,1/4");
  cl->add_option("--qgen", qgen_csv, "generator values of a refinement");
  cl->add_flag("--json", json_mode, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (sp->parsed()) {
      emit(cmd_spins(file_a), json_mode, print_spins, out);
    } else if (inv->parsed()) {
      emit(cmd_invariants(file_a), json_mode, print_invariants, out);
    } else if (eq->parsed()) {
      emit(cmd_equiv(mode, file_a, file_b), json_mode, print_equiv, out);
    } else if (mvc->parsed()) {
      for (auto* sub : {mv_y, mv_up, mv_dn, mv_sl, mv_sh, mv_sg}) {
        if (sub->parsed()) mv.kind = sub->get_name();
      }
      if ((mv.kind == "blow-up" || mv.kind == "slide") && mv.sign != 1 &&
          mv.sign != -1)
        throw parse_error("--sign must be +1 or -1");
      auto r = cmd_move(file_a, mv);
      std::string text = r.dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream of(out_path);
        if (!of) throw parse_error("cannot write file: " + out_path);
        of << text;
      }
    } else if (cl->parsed()) {
      bool direct = !group_csv.empty() || !gram_text.empty() ||
                    !qgen_csv.empty();
      if (direct && !file_a.empty())
        throw parse_error("give either a file or --group/--gram, not both");
      if (direct && (group_csv.empty() || gram_text.empty()))
        throw parse_error("--group and --gram are both required");
      if (!direct && file_a.empty())
        throw parse_error("give a file or --group/--gram");
      auto r = direct ? cmd_classify_direct(group_csv, gram_text, qgen_csv)
                      : cmd_classify_file(file_a);
      emit(r, json_mode, print_classify, out);
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const size_cap_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace spinsurg::cli
