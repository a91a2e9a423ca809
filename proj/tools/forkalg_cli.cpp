// forkalg: construct, multiply, map, verify, and tabulate from the
// command line.  All output is deterministic for fixed arguments; JSON
// payloads follow the schema in json_io.hpp.

#include "CLI11.hpp"
#include "forkalg/functors.hpp"
#include "forkalg/rep.hpp"
#include "forkalg/xi.hpp"
#include "json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace forkalg;
using jio::Json;

namespace {

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw CLI::ValidationError("empty entry in list: " + s);
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("not an integer: " + tok);
    }
  }
  return out;
}

IState parse_state_arg(int n, const std::string& s, const char* flag) {
  try {
    return IState(n, parse_csv(s));
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

UpDownSeq parse_seq_arg(int n, const std::string& s, const char* flag) {
  try {
    UpDownSeq seq = UpDownSeq::parse(s);
    if (seq.n != n)
      throw std::invalid_argument("length " + std::to_string(seq.n) +
                                  " does not match --n");
    return seq;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot write " + out_path);
  os << text;
}

std::string render_json(const Json& j) { return j.dump(1) + "\n"; }

std::string latex_umono(const UMono& m, const char* letter) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  for (int i = 0; i < m.n(); ++i) {
    if (m.e[i] == 0) continue;
    os << letter << "_{" << (i + 1) << "}";
    if (m.e[i] > 1) os << "^{" << m.e[i] << "}";
  }
  return os.str();
}

std::string latex_escape_state(const IState& x) {
  std::ostringstream os;
  os << "\\{";
  for (size_t i = 0; i < x.x.size(); ++i) {
    if (i) os << ",";
    os << x.x[i];
  }
  os << "\\}";
  return os.str();
}

std::string latex_osz(const OszElt& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, p] : a.terms)
    for (const auto& [m, c] : p.terms()) {
      Int v = c;
      if (first) {
        if (v < 0) {
          os << "-";
          v = -v;
        }
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      first = false;
      if (v != 1) os << v.get_str() << "\\,";
      if (!m.is_one()) os << latex_umono(m, "U") << "\\,";
      os << "f_{" << latex_escape_state(key.first) << ","
         << latex_escape_state(key.second) << "}";
    }
  return os.str();
}

std::string latex_sar(const SarElt& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, p] : h.terms)
    for (const auto& [m, c] : p.terms()) {
      Int v = c;
      if (first) {
        if (v < 0) {
          os << "-";
          v = -v;
        }
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      first = false;
      if (v != 1) os << v.get_str() << "\\,";
      if (!m.is_one()) os << latex_umono(m, "x") << "\\,";
      os << "h_{" << key.first.str() << "," << key.second.str() << "}";
    }
  return os.str();
}

struct Common {
  int n = 0;
  int k = -1;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool need_n = true) {
  auto* n = cmd->add_option("--n", c.n, "number of lines");
  if (need_n) n->required();
  cmd->add_option("--k", c.k, "number of strands");
  cmd->add_option("--format", c.format, "text|json|latex")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write output to this file");
}

std::string item_lines(const std::vector<jio::Item>& items,
                       const std::string& side, const std::string& object,
                       int n, int k) {
  std::ostringstream os;
  os << "# " << object << " side=" << side << " n=" << n << " k=" << k
     << " items=" << items.size() << "\n";
  for (const auto& it : items) {
    UMono m(it.monomial);
    os << it.key << "  " << m.str() << "  deg=" << it.degree << "\n";
  }
  return os.str();
}

// ---- basis ----------------------------------------------------------

struct BasisArgs {
  Common c;
  std::string side, x, y, mu, lambda;
  int max_degree = 12;
};

void run_basis(const BasisArgs& a) {
  std::vector<jio::Item> items;
  std::string key;
  if (a.side == "osz") {
    if (a.x.empty() || a.y.empty())
      throw CLI::ValidationError("basis --side osz needs --x and --y");
    IState x = parse_state_arg(a.c.n, a.x, "--x");
    IState y = parse_state_arg(a.c.n, a.y, "--y");
    if (a.c.k >= 0 && (x.k() != a.c.k || y.k() != a.c.k))
      throw CLI::ValidationError("--k does not match the states");
    if (!x.is_left() || !y.is_left())
      throw CLI::ValidationError("states must avoid region n");
    key = jio::pair_key(x, y);
    int d = too_far(x, y) ? 0 : distance(x, y);
    for (const auto& m : basis_piece(x, y, a.max_degree))
      items.push_back({key, m.e, 1, m.qdeg() + d});
    emit(a.c.format == "json"
             ? render_json(jio::payload(a.c.n, x.k(), "osz", "basis", items))
             : item_lines(items, "osz", "basis", a.c.n, x.k()),
         a.c.out);
  } else {
    if (a.mu.empty() || a.lambda.empty())
      throw CLI::ValidationError("basis --side sartori needs --mu and --lambda");
    UpDownSeq mu = parse_seq_arg(a.c.n, a.mu, "--mu");
    UpDownSeq la = parse_seq_arg(a.c.n, a.lambda, "--lambda");
    if (mu.k() != la.k())
      throw CLI::ValidationError("--mu and --lambda need equal strand counts");
    if (a.c.k >= 0 && mu.k() != a.c.k)
      throw CLI::ValidationError("--k does not match the sequences");
    key = jio::pair_key(mu, la);
    int shift = hom_shift(mu, la);
    for (const auto& m : fork_basis(mu, la))
      items.push_back({key, m.e, 1, m.qdeg() + shift});
    emit(a.c.format == "json"
             ? render_json(
                   jio::payload(a.c.n, mu.k(), "sartori", "basis", items))
             : item_lines(items, "sartori", "basis", a.c.n, mu.k()),
         a.c.out);
  }
}

// ---- multiply and xi ------------------------------------------------

struct MultiplyArgs {
  Common c;
  std::string side, x, y, z, mu, lambda, nu;
};

void run_multiply(const MultiplyArgs& a) {
  if (a.side == "osz") {
    if (a.x.empty() || a.y.empty() || a.z.empty())
      throw CLI::ValidationError("multiply --side osz needs --x, --y, --z");
    IState x = parse_state_arg(a.c.n, a.x, "--x");
    IState y = parse_state_arg(a.c.n, a.y, "--y");
    IState z = parse_state_arg(a.c.n, a.z, "--z");
    OszElt prod = osz_generator(x, y) * osz_generator(y, z);
    if (a.c.format == "json")
      emit(render_json(jio::element_json(prod, "product")), a.c.out);
    else if (a.c.format == "latex")
      emit(latex_osz(prod) + "\n", a.c.out);
    else
      emit(prod.str() + "\n", a.c.out);
  } else {
    if (a.mu.empty() || a.lambda.empty() || a.nu.empty())
      throw CLI::ValidationError(
          "multiply --side sartori needs --mu, --lambda, --nu");
    UpDownSeq mu = parse_seq_arg(a.c.n, a.mu, "--mu");
    UpDownSeq la = parse_seq_arg(a.c.n, a.lambda, "--lambda");
    UpDownSeq nu = parse_seq_arg(a.c.n, a.nu, "--nu");
    SarElt f = sar_monomial(mu, la, UPoly::mono(hom_floor_monomial(mu, la)));
    SarElt g = sar_monomial(la, nu, UPoly::mono(hom_floor_monomial(la, nu)));
    SarElt prod = f * g;
    if (a.c.format == "json")
      emit(render_json(jio::element_json(prod, "product")), a.c.out);
    else if (a.c.format == "latex")
      emit(latex_sar(prod) + "\n", a.c.out);
    else
      emit(prod.str() + "\n", a.c.out);
  }
}

struct XiArgs {
  Common c;
  std::string x, y, monomial;
};

void run_xi(const XiArgs& a) {
  IState x = parse_state_arg(a.c.n, a.x, "--x");
  IState y = parse_state_arg(a.c.n, a.y, "--y");
  UMono m(a.c.n);
  if (!a.monomial.empty()) {
    auto e = parse_csv(a.monomial);
    if ((int)e.size() != a.c.n)
      throw CLI::ValidationError("--monomial needs n exponents");
    for (int v : e)
      if (v < 0) throw CLI::ValidationError("--monomial needs nonnegative exponents");
    m = UMono(e);
  }
  SarElt img = xi(osz_monomial(x, y, UPoly::mono(m)));
  if (a.c.format == "json")
    emit(render_json(jio::element_json(img, "image")), a.c.out);
  else if (a.c.format == "latex")
    emit(latex_sar(img) + "\n", a.c.out);
  else
    emit(img.str() + "\n", a.c.out);
}

// ---- verify ---------------------------------------------------------

struct VerifyArgs {
  Common c;
  std::string mode;
  int max_degree = -1;
};

int run_verify(const VerifyArgs& a) {
  constexpr int max_n = 6;
  if (a.c.n > max_n)
    throw CLI::ValidationError("verify is capped at n <= 6; use the acceptance suite for more");
  int d = a.max_degree >= 0 ? a.max_degree : (a.mode == "square" ? 8 : 10);

  struct Run {
    int n, k;
    CheckReport rep;
  };
  std::vector<Run> runs;
  auto sweep = [&](int lo, int hi, auto&& body) {
    if (a.c.k >= 0) {
      if (a.c.k < lo || a.c.k > hi)
        throw CLI::ValidationError("--k out of range for this mode");
      runs.push_back({a.c.n, a.c.k, body(a.c.n, a.c.k)});
    } else {
      for (int k = lo; k <= hi; ++k) runs.push_back({a.c.n, k, body(a.c.n, k)});
    }
  };

  if (a.mode == "iso")
    sweep(0, a.c.n, [&](int n, int k) { return verify_iso(n, k, d); });
  else if (a.mode == "flat")
    sweep(0, a.c.n, [&](int n, int k) { return verify_flatness(n, k, d); });
  else if (a.mode == "square")
    sweep(0, a.c.n - 1, [&](int n, int k) {
      CheckReport rep = verify_commuting_square(n, k, d);
      rep.merge(truncation_multiplicativity(n, k, d));
      return rep;
    });
  else if (a.mode == "relations")
    sweep(0, a.c.n, [&](int n, int k) { return osz_relations(n, k); });
  else
    runs.push_back({a.c.n, -1, rep_suite(a.c.n)});

  int failed = 0;
  Json jruns = Json::array();
  std::ostringstream os;
  for (const auto& r : runs) {
    if (!r.rep.ok()) ++failed;
    std::string name = a.mode + " n=" + std::to_string(r.n) +
                       (r.k >= 0 ? " k=" + std::to_string(r.k) : "");
    os << r.rep.summary(name) << "\n";
    Json fails = Json::array();
    for (size_t i = 0; i < r.rep.failures.size() && i < 8; ++i)
      fails.push_back(r.rep.failures[i]);
    jruns.push_back(Json{{"n", r.n},
                         {"k", r.k},
                         {"cases", r.rep.cases},
                         {"ok", r.rep.ok()},
                         {"failures", fails}});
  }
  os << (failed == 0 ? "ok" : "FAILED") << "\n";
  std::cout << os.str();

  Json report{{"object", "verify_report"},
              {"mode", a.mode},
              {"n", a.c.n},
              {"max_degree", d},
              {"runs", jruns},
              {"ok", failed == 0}};
  std::string path = a.c.out.empty() ? "verify_report.json" : a.c.out;
  std::ofstream rf(path);
  if (!rf) throw std::runtime_error("cannot write " + path);
  rf << report.dump(1) << "\n";
  return failed;
}

// ---- tables ---------------------------------------------------------

struct TablesArgs {
  Common c;
  std::string mode, side;
};

std::vector<int> weight_range(const TablesArgs& a) {
  if (a.c.k >= 0) return {a.c.k};
  std::vector<int> ks;
  for (int k = 0; k <= a.c.n; ++k) ks.push_back(k);
  return ks;
}

void run_tables(const TablesArgs& a) {
  std::ostringstream text;
  std::vector<jio::Item> items;
  int n = a.c.n;

  if (a.mode == "forms") {
    for (int k : weight_range(a)) {
      auto order = all_seqs_down_order(n, k);
      std::vector<RepVector> canon;
      for (const auto& s : order) canon.push_back(canonical_vector(s));
      for (const char* side : {"sartori", "osz"}) {
        FormKind kind =
            side[0] == 's' ? FormKind::sartori : FormKind::osz;
        text << "# forms side=" << side << " n=" << n << " k=" << k << "\n";
        for (size_t i = 0; i < order.size(); ++i) {
          for (size_t j = 0; j < order.size(); ++j) {
            QRat v = form(kind, canon[i], canon[j]);
            std::string key = std::string(side) + ":k=" + std::to_string(k) +
                              ":" + order[i].str() + "|" + order[j].str();
            items.push_back({key, {}, jio::qrat_json(v), jio::mono_qdeg(v)});
            if (a.c.format == "latex")
              text << (j ? " & " : "") << jio::latex_qrat(v);
            else
              text << (j ? "  " : "") << v.str();
          }
          text << (a.c.format == "latex" ? " \\\\\n" : "\n");
        }
      }
    }
  } else if (a.mode == "canonical") {
    for (int k : weight_range(a))
      for (const auto& s : all_seqs_down_order(n, k)) {
        RepVector v = canonical_vector(s);
        text << s.str() << " =";
        for (const auto& [mask, c] : v.c) {
          UpDownSeq t = seq_of_mask(n, mask);
          items.push_back({s.str() + "|" + t.str(),
                           {},
                           jio::qrat_json(c),
                           jio::mono_qdeg(c)});
          text << "  (" << c.str() << ") " << t.str();
        }
        text << "\n";
      }
  } else if (a.mode == "dmatrix") {
    for (int k : weight_range(a)) {
      auto order = all_seqs_down_order(n, k);
      auto d = d_matrix(n, k);
      text << "# dmatrix n=" << n << " k=" << k << "\n";
      for (size_t r = 0; r < order.size(); ++r) {
        for (size_t c = 0; c < order.size(); ++c) {
          items.push_back({"k=" + std::to_string(k) + ":" + order[r].str() +
                               "|" + order[c].str(),
                           {},
                           jio::laurent_json(d[r][c]),
                           d[r][c].is_zero() ? 0 : d[r][c].hi()});
          if (a.c.format == "latex")
            text << (c ? " & " : "") << jio::latex_laurent(d[r][c]);
          else
            text << (c ? "  " : "") << d[r][c].str();
        }
        text << (a.c.format == "latex" ? " \\\\\n" : "\n");
      }
    }
  } else {  // gradeddim
    if (a.side != "osz" && a.side != "sartori")
      throw CLI::ValidationError("tables gradeddim needs --side osz|sartori");
    for (int k : weight_range(a)) {
      if (a.side == "osz") {
        for (const auto& x : all_states(n, k, true))
          for (const auto& y : all_states(n, k, true)) {
            QRat v = graded_dim(x, y);
            items.push_back({jio::pair_key(x, y),
                             {},
                             jio::qrat_json(v),
                             distance(x, y)});
            text << jio::pair_key(x, y) << "  " << v.str() << "\n";
          }
      } else {
        for (const auto& mu : all_seqs(n, k))
          for (const auto& la : all_seqs(n, k)) {
            Laurent v = graded_rank(mu, la);
            items.push_back({jio::pair_key(mu, la),
                             {},
                             jio::laurent_json(v),
                             distance(mu.to_state(), la.to_state())});
            text << jio::pair_key(mu, la) << "  " << v.str() << "\n";
          }
      }
    }
  }

  std::string side = a.mode == "gradeddim" ? a.side : "both";
  if (a.c.format == "json")
    emit(render_json(
             jio::payload(n, a.c.k >= 0 ? a.c.k : -1, side, a.mode, items)),
         a.c.out);
  else
    emit(text.str(), a.c.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bordered strands algebras, hom algebras, and their comparison"};
  app.require_subcommand(1);

  BasisArgs ba;
  auto* basis = app.add_subcommand("basis", "list a basis of one piece");
  add_common(basis, ba.c);
  basis->add_option("--side", ba.side, "osz|sartori")
      ->required()
      ->check(CLI::IsMember({"osz", "sartori"}));
  basis->add_option("--x", ba.x, "left state, e.g. 0,3");
  basis->add_option("--y", ba.y, "right state");
  basis->add_option("--mu", ba.mu, "target sequence, e.g. uddu");
  basis->add_option("--lambda", ba.lambda, "source sequence");
  basis->add_option("--max-degree", ba.max_degree, "degree cap for osz pieces")
      ->capture_default_str();

  MultiplyArgs ma;
  auto* mult = app.add_subcommand(
      "multiply", "compose the generators along a three-node chain");
  add_common(mult, ma.c);
  mult->add_option("--side", ma.side, "osz|sartori")
      ->required()
      ->check(CLI::IsMember({"osz", "sartori"}));
  mult->add_option("--x", ma.x, "first state");
  mult->add_option("--y", ma.y, "middle state");
  mult->add_option("--z", ma.z, "last state");
  mult->add_option("--mu", ma.mu, "first sequence");
  mult->add_option("--lambda", ma.lambda, "middle sequence");
  mult->add_option("--nu", ma.nu, "last sequence");

  XiArgs xa;
  auto* xicmd = app.add_subcommand(
      "xi", "push a strands monomial through the comparison map");
  add_common(xicmd, xa.c);
  xicmd->add_option("--x", xa.x, "left state")->required();
  xicmd->add_option("--y", xa.y, "right state")->required();
  xicmd->add_option("--monomial", xa.monomial,
                    "U exponents, e.g. 1,0,0 (default: none)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("mode", va.mode, "iso|flat|square|rep|relations")
      ->required()
      ->check(CLI::IsMember({"iso", "flat", "square", "rep", "relations"}));
  add_common(verify, va.c);
  verify->add_option("--max-degree", va.max_degree,
                     "degree cap (default 10, square 8)");

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "emit reference tables");
  tables->add_option("mode", ta.mode, "forms|canonical|dmatrix|gradeddim")
      ->required()
      ->check(CLI::IsMember({"forms", "canonical", "dmatrix", "gradeddim"}));
  add_common(tables, ta.c);
  tables->add_option("--side", ta.side, "osz|sartori (gradeddim only)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (basis->parsed()) run_basis(ba);
    else if (mult->parsed()) run_multiply(ma);
    else if (xicmd->parsed()) run_xi(xa);
    else if (verify->parsed()) return run_verify(va);
    else if (tables->parsed()) run_tables(ta);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
