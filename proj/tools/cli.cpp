#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clans/capacity_tree.hpp"
#include "clans/clan.hpp"
#include "clans/hecke.hpp"
#include "clans/klv.hpp"
#include "clans/path_diagram.hpp"
#include "clans/singularity.hpp"

namespace clans::cli {

namespace {

using nlohmann::json;

json poly_json(const QPoly& p) { return json(p.coeffs()); }

const char* tristate_str(const TriState& t) {
  switch (t.status) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    default: return "unknown";
  }
}

struct GenFilters {
  bool avoid = false;
  bool smooth = false, singular = false;
  bool lci = false, non_lci = false;
  bool gorenstein = false, non_gorenstein = false;
  bool conjectural = false;
  int max_length = -1;
};

int cmd_gen(int p, int q, const GenFilters& f, bool as_json, std::ostream& out) {
  for (const Clan& c : generate_clans(p, q)) {
    if (f.avoid && !avoids_1212(c)) continue;
    int len = clan_length(c);
    if (f.max_length >= 0 && len > f.max_length) continue;
    if (f.smooth && !is_smooth(c)) continue;
    if (f.singular && is_smooth(c)) continue;
    if (f.lci || f.non_lci) {
      TriState t = is_lci(c, f.conjectural);
      if (f.lci && t.status != TriState::Yes) continue;
      if (f.non_lci && t.status != TriState::No) continue;
    }
    if (f.gorenstein || f.non_gorenstein) {
      TriState t = is_gorenstein(c);
      if (f.gorenstein && t.status != TriState::Yes) continue;
      if (f.non_gorenstein && t.status != TriState::No) continue;
    }
    if (as_json) {
      json rec{{"schema", "clans.gen/1"},
               {"clan", c.str()},
               {"p", c.p()},
               {"q", c.q()},
               {"length", len}};
      out << rec.dump() << "\n";
    } else {
      out << c.str() << "\tlength=" << len << "\n";
    }
  }
  return 0;
}

int cmd_classify(const Clan& c, bool conjectural, bool as_json,
                 std::ostream& out) {
  bool smooth = is_smooth(c);
  TriState lci = is_lci(c, conjectural);
  TriState gor = is_gorenstein(c);
  if (as_json) {
    json rec{{"schema", "clans.classify/1"},
             {"clan", c.str()},
             {"p", c.p()},
             {"q", c.q()},
             {"length", clan_length(c)},
             {"avoids_1212", avoids_1212(c)},
             {"smooth", smooth},
             {"lci", tristate_str(lci)},
             {"lci_conjectural", lci.conjectural},
             {"gorenstein", tristate_str(gor)}};
    out << rec.dump() << "\n";
  } else {
    out << "clan:       " << c.str() << "  (p=" << c.p() << ", q=" << c.q()
        << ", length=" << clan_length(c) << ")\n";
    out << "smooth:     " << (smooth ? "yes" : "no") << "\n";
    out << "lci:        " << tristate_str(lci)
        << (lci.conjectural ? " (conjectural)" : "") << "\n";
    out << "gorenstein: " << tristate_str(gor) << "\n";
  }
  return 0;
}

int cmd_locus(const Clan& c, const std::string& kind, bool as_json,
              std::ostream& out) {
  std::vector<Clan> comps;
  if (kind == "singular") comps = singular_locus(c);
  else if (kind == "non-lci") comps = non_lci_locus(c);
  else if (kind == "non-gorenstein") comps = non_gorenstein_locus(c);
  else throw CLI::ValidationError("locus", "unknown kind: " + kind);
  if (as_json) {
    json arr = json::array();
    for (const Clan& t : comps) arr.push_back(t.str());
    json rec{{"schema", "clans.locus/1"},
             {"clan", c.str()},
             {"p", c.p()},
             {"q", c.q()},
             {"kind", kind},
             {"components", arr}};
    out << rec.dump() << "\n";
  } else {
    out << kind << " locus of " << c.str() << ": " << comps.size()
        << " component(s)\n";
    for (const Clan& t : comps) out << "  " << t.str() << "\n";
  }
  return 0;
}

int cmd_diagram(const Clan& c, const std::optional<Clan>& tau,
                const std::string& format, std::ostream& out) {
  PathDiagram d = clan_diagram(c);
  std::optional<PathDiagram> overlay;
  if (tau) {
    if (!diagram_contains(c, *tau))
      throw std::invalid_argument("diagram: tau not inside the clan's band");
    overlay = clan_diagram(*tau);
  }
  out << (format == "svg" ? render_svg(d, overlay) : render_ascii(d, overlay));
  return 0;
}

int cmd_kl(const Permutation& x, const Permutation& w, bool as_json,
           std::ostream& out) {
  QPoly p;
  if (bruhat_leq(x, w)) {
    if (is_cograssmannian(w)) {
      p = ls_kl(x, w);
    } else {
      KlContext ctx(w.n());
      p = ctx.kl_poly(x, w);
    }
  }
  if (as_json) {
    json rec{{"schema", "clans.kl/1"},
             {"x", x.str()},
             {"w", w.str()},
             {"poly", poly_json(p)}};
    out << rec.dump() << "\n";
  } else {
    out << "P = " << p.str() << "\n";
  }
  return 0;
}

int cmd_klv(const Clan& tau, const Clan& gamma, const std::string& method,
            bool as_json, std::ostream& out) {
  if (tau.n() != gamma.n() || tau.p() != gamma.p())
    throw std::invalid_argument("klv: clans have different (p,q)");
  std::string used = method;
  if (used == "auto") used = avoids_1212(gamma) ? "richardson" : "recursion";
  QPoly p;
  if (used == "richardson") {
    p = klv_richardson(tau, gamma);
  } else {
    KlvTable t = klv_table(gamma.p(), gamma.q());
    const QPoly* e = t.entry(t.set().index(tau), t.set().index(gamma));
    p = e ? *e : QPoly();
  }
  if (as_json) {
    json rec{{"schema", "clans.klv/1"},
             {"tau", tau.str()},
             {"gamma", gamma.str()},
             {"p", gamma.p()},
             {"q", gamma.q()},
             {"method", used},
             {"poly", poly_json(p)}};
    out << rec.dump() << "\n";
  } else {
    out << "P = " << p.str() << "  [" << used << "]\n";
  }
  return 0;
}

int cmd_klv_table(int p, int q, bool check, bool strict, bool as_json,
                  std::ostream& out, std::ostream& err) {
  KlvTable t = klv_table(p, q);
  const ClanSet& S = t.set();
  for (int d = 0; d < S.size(); ++d) {
    for (const auto& [g, poly] : t.row(d)) {
      if (as_json) {
        json rec{{"schema", "clans.klv_table/1"},
                 {"delta", S.clan(d).str()},
                 {"tau", S.clan(g).str()},
                 {"p", p},
                 {"q", q},
                 {"poly", poly_json(poly)}};
        out << rec.dump() << "\n";
      } else {
        out << S.clan(d).str() << "\t" << S.clan(g).str() << "\t"
            << poly.str() << "\n";
      }
    }
  }
  int rc = 0;
  if (check) {
    long long checked = 0, bad = 0;
    for (int d = 0; d < S.size(); ++d) {
      if (!avoids_1212(S.clan(d))) continue;
      for (const auto& [g, poly] : t.row(d)) {
        QPoly rich = klv_richardson(S.clan(g), S.clan(d));
        ++checked;
        if (!(rich == poly)) {
          ++bad;
          json rec{{"schema", "clans.klv_check/1"},
                   {"delta", S.clan(d).str()},
                   {"tau", S.clan(g).str()},
                   {"table", poly_json(poly)},
                   {"richardson", poly_json(rich)}};
          err << rec.dump() << "\n";
        }
      }
    }
    err << "check: " << checked << " entries, " << bad << " discrepancies\n";
    if (bad > 0) rc = 3;
  }
  if (strict && !t.diagnostics().empty()) {
    for (const auto& dg : t.diagnostics())
      err << "non-constant correction at delta=" << dg.delta
          << " gamma=" << dg.gamma << ": " << dg.correction << "\n";
    rc = 3;
  }
  return rc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact combinatorics of (p,q)-clans: orbit-closure "
               "singularity classification and Kazhdan-Lusztig(-Vogan) "
               "polynomials"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Enumerate all (p,q)-clans");
  int gp = 0, gq = 0;
  GenFilters gf;
  gen->add_option("p", gp, "Up multiplicity")->required();
  gen->add_option("q", gq, "Right multiplicity")->required();
  gen->add_flag("--avoid-1212", gf.avoid, "Only clans without interleaved pairs");
  auto* fs = gen->add_flag("--smooth", gf.smooth, "Only smooth orbit closures");
  auto* fg = gen->add_flag("--singular", gf.singular, "Only singular ones");
  fs->excludes(fg);
  auto* fl = gen->add_flag("--lci", gf.lci, "Only lci");
  auto* fn = gen->add_flag("--non-lci", gf.non_lci, "Only non-lci");
  fl->excludes(fn);
  auto* fo = gen->add_flag("--gorenstein", gf.gorenstein, "Only Gorenstein");
  auto* fu = gen->add_flag("--non-gorenstein", gf.non_gorenstein,
                           "Only non-Gorenstein");
  fo->excludes(fu);
  gen->add_flag("--conjectural", gf.conjectural,
                "Use the extended pattern list for interleaved clans");
  gen->add_option("--max-length", gf.max_length, "Keep lengths <= N");

  // classify
  auto* cls = app.add_subcommand("classify", "Singularity profile of one clan");
  std::string cls_clan;
  bool cls_conj = false;
  cls->add_option("clan", cls_clan, "Clan text")->required();
  cls->add_flag("--conjectural", cls_conj,
                "Extended pattern verdicts for interleaved clans");

  // locus
  auto* loc = app.add_subcommand("locus", "Components of a singularity locus");
  std::string loc_clan, loc_kind = "singular";
  loc->add_option("clan", loc_clan, "Clan text")->required();
  loc->add_option("--kind", loc_kind, "singular | non-lci | non-gorenstein")
      ->check(CLI::IsMember({"singular", "non-lci", "non-gorenstein"}));

  // diagram
  auto* dia = app.add_subcommand("diagram", "Draw the two-path diagram");
  std::string dia_clan, dia_tau, dia_format = "ascii";
  dia->add_option("clan", dia_clan, "Clan text")->required();
  dia->add_option("--tau", dia_tau, "Overlay clan");
  dia->add_option("--diagram-format", dia_format, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  // kl
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  std::string kl_x, kl_w;
  kl->add_option("x", kl_x, "Lower permutation")->required();
  kl->add_option("w", kl_w, "Upper permutation")->required();

  // klv
  auto* klv = app.add_subcommand("klv", "KLV polynomial P_{tau,gamma}");
  std::string klv_tau, klv_gamma, klv_method = "auto";
  klv->add_option("tau", klv_tau, "Lower clan")->required();
  klv->add_option("gamma", klv_gamma, "Upper clan")->required();
  klv->add_option("--method", klv_method, "auto | richardson | recursion")
      ->check(CLI::IsMember({"auto", "richardson", "recursion"}));

  // klv-table
  auto* tab = app.add_subcommand("klv-table", "Full KLV table for (p,q)");
  int tp = 0, tq = 0;
  bool tab_check = false, tab_strict = false;
  tab->add_option("p", tp, "Up multiplicity")->required();
  tab->add_option("q", tq, "Right multiplicity")->required();
  tab->add_flag("--check", tab_check,
                "Cross-validate rows of interleaving-free clans");
  tab->add_flag("--strict", tab_strict,
                "Fail on non-constant corrections");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  bool as_json = format == "json";
  try {
    if (*gen) return cmd_gen(gp, gq, gf, as_json, out);
    if (*cls) return cmd_classify(Clan::parse(cls_clan), cls_conj, as_json, out);
    if (*loc) return cmd_locus(Clan::parse(loc_clan), loc_kind, as_json, out);
    if (*dia) {
      std::optional<Clan> tau;
      if (!dia_tau.empty()) tau = Clan::parse(dia_tau);
      return cmd_diagram(Clan::parse(dia_clan), tau, dia_format, out);
    }
    if (*kl)
      return cmd_kl(Permutation::parse(kl_x), Permutation::parse(kl_w),
                    as_json, out);
    if (*klv)
      return cmd_klv(Clan::parse(klv_tau), Clan::parse(klv_gamma), klv_method,
                     as_json, out);
    if (*tab) return cmd_klv_table(tp, tq, tab_check, tab_strict, as_json, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace clans::cli
