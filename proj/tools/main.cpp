// nck: command-line front end to the library.
//
// Exit status: 0 ok, 1 a verification reported failures, 2 usage error,
// 3 domain error (bad code, value outside a domain), 4 cost guard.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "nck/idempotents.hpp"
#include "nck/tamari.hpp"
#include "nck/verify.hpp"
#include "render.hpp"

using namespace nck;
using nck::cli::json;

namespace {

enum Status { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3, kCost = 4 };

struct Options {
  std::string format = "text";
  std::optional<int> max_n;
  std::optional<int> n;
  std::optional<int> k;
  int r = 2;
  std::string forest, other, I, lambda, spec = "symbolic", basis, to, what, half = "full", suite, a, b;
  bool reverse = false, interior = false, trees_only = false, prime = false, chapoton = false, closed = false;
  bool is_signed = false, list = false;
};

Options opt;

// Rejects n above the cap given by --max-n or the command default.
void guard(const std::string& what, long n, int default_cap) {
  int cap = opt.max_n.value_or(default_cap);
  if (n > cap)
    throw std::length_error(what + " = " + std::to_string(n) + " exceeds the cost guard " + std::to_string(cap) +
                            " (raise it with --max-n)");
}

int need_n() {
  if (!opt.n) throw CLI::RequiredError("--n");
  if (*opt.n < 0) throw std::invalid_argument("--n must be nonnegative");
  return *opt.n;
}

Forest need_forest(int cap) {
  Forest f = Forest::parse(opt.forest);
  guard("forest size", f.size(), cap);
  return f;
}

Forest need_tree(int cap) {
  Forest f = need_forest(cap);
  if (!f.is_tree()) throw std::invalid_argument("expected a tree, got " + f.str());
  return f;
}

Partition parse_partition(const std::string& text) {
  Partition p = parse_sequence(text);
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + text);
  return p;
}

// ---------------------------------------------------------------- forest

json forest_parse() {
  Forest f = Forest::parse(opt.forest);
  json out = {{"code", f.str()},
              {"reverse_code", format_sequence(f.reverse_code())},
              {"size", f.size()},
              {"roots", f.roots()},
              {"is_tree", f.is_tree()},
              {"trees", cli::codes_json(f.trees())}};
  if (f.is_tree()) {
    auto c = non_plane_class(f);
    out["non_plane_class"] = c.canonical;
    out["automorphisms"] = c.aut_order;
  }
  if (f.size() <= 12) out["max_linear_extension"] = format_sequence(max_linear_extension(f));
  return out;
}

json forest_list() {
  int n = need_n();
  guard("n", n, 10);
  return opt.trees_only ? cli::codes_json(enumerate_trees(n)) : cli::codes_json(enumerate_forests(n));
}

json forest_extensions() {
  Forest f = need_forest(8);
  return {{"extensions", cli::words_json(linear_extensions(f))},
          {"max", format_sequence(max_linear_extension(f))}};
}

// ---------------------------------------------------------------- tamari

// With --reverse, codes are read and written in reverse Polish order.
Forest tamari_input(const std::string& text) {
  if (!opt.reverse) return Forest::parse(text);
  auto code = parse_sequence(text);
  return Forest::from_code({code.rbegin(), code.rend()});
}

json tamari_set(bool up) {
  Forest f = tamari_input(opt.forest);
  guard("forest size", f.size(), 8);
  auto s = up ? upset(f) : downset(f);
  json out = json::array();
  for (const auto& g : s) out.push_back(opt.reverse ? format_sequence(g.reverse_code()) : g.str());
  return out;
}

json tamari_leq() {
  Forest f = tamari_input(opt.forest), g = tamari_input(opt.other);
  guard("forest size", f.size(), 8);
  if (f.size() != g.size()) throw std::invalid_argument("forests of different sizes are not comparable");
  return leq(f, g);
}

json tamari_covers() { return cli::codes_json(tree_covers(need_tree(10))); }

// ---------------------------------------------------------------- hopf

json hopf_coproduct() {
  Forest f = need_forest(8);
  if (opt.r < 1) throw std::invalid_argument("--r must be positive");
  guard("r", opt.r, 4);
  return {{"basis", "Y"}, {"terms", cli::terms_json(y_coproduct(f, opt.r))}};
}

json hopf_product() {
  Forest a = Forest::parse(opt.forest), b = Forest::parse(opt.other);
  guard("total size", a.size() + b.size(), 8);
  XElem<long> u(a), v(b);
  if (opt.half == "full") return cli::x_json(x_product(u, v));
  if (opt.half == "prec") return cli::x_json(x_prec(u, v));
  if (opt.half == "succ") return cli::x_json(x_succ(u, v));
  throw CLI::ValidationError("--half", "expected full, prec or succ");
}

json hopf_prelie() {
  Forest s = Forest::parse(opt.forest), t = Forest::parse(opt.other);
  guard("total size", s.size() + t.size(), 10);
  if (!s.is_tree() || !t.is_tree()) throw std::invalid_argument("prelie takes two trees");
  return cli::x_json(prelie_basis(s, t));
}

json hopf_c_to_x() { return cli::x_json(c_to_x(LinComb<Forest, long>(need_forest(8)))); }

json hopf_x_to_c() {
  return {{"basis", "C"}, {"terms", cli::terms_json(x_to_c(XElem<long>(need_forest(8))))}};
}

json hopf_quotient() {
  Permutation a = parse_permutation(opt.a), b = parse_permutation(opt.b);
  guard("total length", static_cast<long>(a.size() + b.size()), kFQSymMaxN);
  auto r = pattern_quotient_check(a, b);
  return {{"full", cli::terms_json(r.full)},
          {"quotient", cli::terms_json(r.quotient)},
          {"as_x", cli::terms_json(r.as_x)},
          {"x_product", cli::terms_json(r.x_side)},
          {"agree", r.agree}};
}

// ---------------------------------------------------------------- nsym

Composition need_composition(int cap) {
  if (opt.I.empty()) throw CLI::RequiredError("--I");
  Composition i = Composition::parse(opt.I);
  guard("weight", i.weight(), cap);
  return i;
}

json nsym_embed() {
  auto e = nsym_basis<long>(parse_nbasis(opt.basis), need_composition(8));
  return cli::x_json(embed_x(e));
}

json nsym_table() {
  int n = need_n();
  guard("n", n, 6);
  json out = json::object();
  for (int m = 1; m <= n; ++m)
    for (const auto& i : compositions(m)) out[i.str()] = cli::terms_json(ribbon_to_x(i));
  return {{"basis", "X"}, {"ribbons", out}};
}

json nsym_convert() {
  auto e = nsym_basis<long>(parse_nbasis(opt.basis), need_composition(10));
  return cli::nsym_json(convert(e, parse_nbasis(opt.to)));
}

json nsym_gamma() {
  auto g = gamma_qsym(need_forest(8));
  if (opt.basis == "M") return cli::qsym_json(qsym_convert(g, QBasis::M));
  if (opt.basis != "F" && !opt.basis.empty()) throw CLI::ValidationError("--basis", "expected F or M");
  return cli::qsym_json(g);
}

json nsym_xqt() {
  auto g = gamma_qsym(need_forest(5));
  RationalFn v = eval_Xqt(g);
  if (opt.chapoton) {
    // Divide out 1 + qx, then set x = -1/q.
    RationalFn p = at_t_affine(v);
    MultiPoly q = MultiPoly::var(Var::q());
    auto reduced = p.num().try_div(MultiPoly(1) + q * MultiPoly::var(Var::x()));
    if (!reduced) throw std::domain_error("Gamma' is not divisible by 1+qx");
    RationalFn c = RationalFn(*reduced, p.den()).substitute(Var::x(), -MultiPoly::var(Var::q(), -1));
    return {{"chapoton", c.str()}};
  }
  if (opt.prime) return {{"gamma_prime", at_t_affine(v).str()}};
  return {{"gamma", v.str()}};
}

// ---------------------------------------------------------------- birkhoff

json birkhoff_phi_plus() {
  Forest f = need_forest(8);
  ASpec spec = ASpec::parse(opt.spec);
  json out = {{"recursion", phi_plus(f, spec, std::max(f.size(), 1)).str()}};
  if (opt.closed) out["closed_form"] = phi_plus_closed(f, spec).str();
  return out;
}

json birkhoff_sigma(bool plus) {
  int n = need_n();
  guard("n", n, 6);
  ASpec spec = ASpec::parse(opt.spec);
  return cli::x_json(plus ? sigma_plus(n, spec) : sigma_minus(n, spec));
}

json birkhoff_d_lambda() {
  int n = need_n();
  guard("n", n, 6);
  Partition lambda = parse_partition(opt.lambda);
  if (opt.basis == "C" || opt.basis.empty())
    return {{"basis", "C"}, {"terms", cli::terms_json(d_lambda_c(n, lambda))}};
  if (opt.basis == "X") return cli::x_json(d_lambda_x(n, lambda));
  if (opt.basis == "R") return cli::nsym_json(d_lambda_r(n, lambda));
  throw CLI::ValidationError("--basis", "expected C, X or R");
}

json birkhoff_words() {
  Composition i = need_composition(9);
  auto ws = words_W(i);
  return {{"composition", i.str()},
          {"count", ws.size()},
          {"catalan_block_product", catalan_block_count(i)},
          {"words", cli::words_json(ws)}};
}

json birkhoff_word_table() {
  int n = need_n();
  guard("n", n, 7);
  std::map<Composition, std::vector<Word>> blocks;
  for (const auto& w : small_words(n)) blocks[word_class(w)].push_back(w);
  json out = json::object();
  for (const auto& [i, ws] : blocks) out[i.str()] = cli::words_json(ws);
  return {{"count", small_words(n).size()}, {"classes", out}};
}

json birkhoff_series() {
  int n = need_n();
  guard("n", n, 6);
  ASpec spec = ASpec::parse(opt.spec);
  if (opt.what == "C") return {{"basis", "C"}, {"terms", cli::terms_json(series_C(n, spec))}};
  if (opt.what == "D") return {{"basis", "C"}, {"terms", cli::terms_json(series_D(n, spec))}};
  throw CLI::ValidationError("--what", "expected C or D");
}

json birkhoff_factorization() {
  int n = need_n();
  guard("n", n, 6);
  return {{"holds", factorization_holds(n, ASpec::parse(opt.spec))}};
}

// ---------------------------------------------------------------- idem

template <class R>
json in_basis(const NsymElem<R>& e) {
  if (opt.basis == "X") return cli::x_json(embed_x(e));
  if (opt.basis.empty() || opt.basis == "R") return cli::nsym_json(convert(e, NBasis::R));
  return cli::nsym_json(convert(e, parse_nbasis(opt.basis)));
}

json idem_dynkin() {
  int n = need_n();
  guard("n", n, 7);
  auto d = dynkin(n);
  return {{"psi", in_basis(d.psi)}, {"psibar", in_basis(d.psibar)}};
}

json idem_solomon() {
  int n = need_n();
  guard("n", n, 7);
  return in_basis(solomon(n));
}

json idem_eulerian() {
  int n = need_n();
  guard("n", n, 7);
  if (!opt.k) throw CLI::RequiredError("--k");
  auto e = eulerian(n, *opt.k);
  if (opt.basis.empty() || opt.basis == "X") return cli::x_json(e);
  return in_basis(x_to_ribbons(e, n));
}

json idem_qsolomon() {
  int n = need_n();
  guard("n", n, 6);
  return in_basis(q_solomon(n));
}

json idem_chi() { return {{"chi", chi_poly(need_tree(8)).str()}}; }

json idem_verify() {
  int n = need_n();
  guard("n", n, kGroupAlgebraMaxN);
  if (n < 1) throw std::invalid_argument("--n must be positive");
  std::map<std::string, NsymElem<Rational>> family;
  auto d = dynkin(n);
  family["psi"] = d.psi;
  family["psibar"] = d.psibar;
  family["solomon"] = solomon(n);
  for (int k = 1; k <= n; ++k) family["eulerian_" + std::to_string(k)] = x_to_ribbons(eulerian(n, k), n);
  for (const auto& lambda : partitions(n - 1))
    family["D_" + (lambda.empty() ? std::string("()") : format_sequence(lambda))] = d_lambda_r(n, lambda);
  json out = json::object();
  for (const auto& [name, e] : family) {
    if (opt.what == "primitive") {
      out[name] = is_primitive(e);
    } else if (opt.what == "quasi") {
      auto q = quasi_idempotent_check(e, n);
      out[name] = {{"proportional", q.proportional}, {"scalar", to_string(q.scalar)}};
    } else {
      throw CLI::ValidationError("--what", "expected primitive or quasi");
    }
  }
  return out;
}

// ---------------------------------------------------------------- ehrhart

ForestPoset need_poset(int cap = 8) { return ForestPoset::from_forest(need_forest(cap)); }

int need_dilation() {
  int n = need_n();
  guard("n", n, 8);
  return n;
}

json ehrhart_poly() { return {{"polynomial", ehrhart_polynomial(need_poset()).str()}}; }

json ehrhart_points() {
  auto p = need_poset();
  auto pts = lattice_points(p, need_dilation(), opt.interior);
  return {{"count", pts.size()}, {"points", cli::words_json(pts)}};
}

json ehrhart_qcount() {
  auto p = need_poset(7);
  int n = need_dilation();
  if (opt.interior && n < 1) throw std::invalid_argument("the interior q-count needs n >= 1");
  MultiPoly v = q_count(p, n, opt.interior ? QCountKind::Interior : QCountKind::Boundary);
  MultiPoly abs = opt.interior && p.n % 2 == 1 ? -v : v;
  return {{"value", v.str()}, {"abs_value", abs.str()}};
}

json ehrhart_reciprocity() {
  auto p = need_poset();
  int n = need_dilation();
  if (n < 1) throw std::invalid_argument("--n must be positive");
  auto r = reciprocity_check(p, n);
  return {{"interior_points", r.interior_points},
          {"polynomial_value", to_string(r.polynomial_value)},
          {"signed_gamma_count", r.signed_gamma_count},
          {"holds", r.holds}};
}

json ehrhart_gamma() {
  return {{"basis", "M"}, {"terms", cli::terms_json(gamma_wqsym(need_poset(), opt.is_signed))}};
}

// ---------------------------------------------------------------- verify

int verify_status = kOk;

json run_verify() {
  if (opt.list || opt.suite.empty()) {
    json out = json::object();
    for (const auto& s : verify_suites())
      out[s.name] = {{"description", s.description}, {"default_n", s.default_n}, {"max_n", s.max_n}};
    return out;
  }
  try {
    suite_info(opt.suite);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("suite", e.what());
  }
  auto r = run_suite(opt.suite, opt.n, opt.max_n);
  if (!r.passed()) verify_status = kFailed;
  return {{"suite", r.name},
          {"n", r.n},
          {"checks", r.checks},
          {"failed", r.failed},
          {"passed", r.passed()},
          {"counterexamples", r.counterexamples}};
}

// ---------------------------------------------------------------- driver

struct Selected {
  std::string command;
  CLI::App* app = nullptr;
  std::function<json()> run;
};

Selected selected;

CLI::App* leaf(CLI::App* group, const std::string& name, const std::string& help, std::function<json()> run) {
  auto* sub = group->add_subcommand(name, help);
  sub->callback([sub, group, run] {
    selected = {group->get_name() + " " + sub->get_name(), sub, run};
  });
  return sub;
}

void add_n(CLI::App* s) { s->add_option("--n", opt.n, "degree or dilation")->required(); }
void add_forest(CLI::App* s) { s->add_option("--forest,--code", opt.forest, "Polish code")->required(); }
void add_spec(CLI::App* s) { s->add_option("--spec", opt.spec, "\"symbolic\" or \"a,b\"")->capture_default_str(); }

json params_of(const CLI::App* app) {
  json out = json::object();
  for (const auto* o : app->get_options()) {
    std::string name = o->get_single_name();
    if (name == "help" || o->count() == 0) continue;
    if (o->get_expected_min() == 0)
      out[name] = true;
    else
      out[name] = o->as<std::string>();
  }
  return out;
}

void emit(const json& envelope, const json& payload) {
  if (opt.format == "json")
    std::cout << envelope.dump(2) << "\n";
  else
    cli::render_text(payload, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with plane forests, noncommutative symmetric functions and Lie idempotents."};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", opt.max_n, "override the cost guard of the command");

  auto* forest = app.add_subcommand("forest", "plane forests and their codes")->require_subcommand(1);
  add_forest(leaf(forest, "parse", "decode a Polish code", forest_parse));
  auto* list = leaf(forest, "list", "all forests with n nodes", forest_list);
  add_n(list);
  list->add_flag("--trees", opt.trees_only, "trees only");
  add_forest(leaf(forest, "extensions", "linear extensions of the canonical labelling", forest_extensions));

  auto* tamari = app.add_subcommand("tamari", "Tamari order on forests")->require_subcommand(1);
  auto* up = leaf(tamari, "upset", "forests above", [] { return tamari_set(true); });
  auto* down = leaf(tamari, "downset", "forests below", [] { return tamari_set(false); });
  auto* tleq = leaf(tamari, "leq", "whether forest <= other", tamari_leq);
  tleq->add_option("--other", opt.other, "Polish code")->required();
  for (auto* s : {up, down, tleq}) {
    add_forest(s);
    s->add_flag("--reverse", opt.reverse, "codes in reverse Polish order");
  }
  add_forest(leaf(tamari, "covers", "cover moves of a tree", tamari_covers));

  auto* hopf = app.add_subcommand("hopf", "the Hopf algebra on forests")->require_subcommand(1);
  auto* cop = leaf(hopf, "coproduct", "iterated coproduct of Y_F", hopf_coproduct);
  add_forest(cop);
  cop->add_option("--r", opt.r, "number of tensor factors")->capture_default_str();
  auto* prod = leaf(hopf, "product", "X_F X_G or a dendriform half", hopf_product);
  add_forest(prod);
  prod->add_option("--other", opt.other, "Polish code")->required();
  prod->add_option("--half", opt.half, "full, prec or succ")->capture_default_str();
  auto* pl = leaf(hopf, "prelie", "preLie product of two trees", hopf_prelie);
  add_forest(pl);
  pl->add_option("--other", opt.other, "Polish code")->required();
  add_forest(leaf(hopf, "c-to-x", "C_F in the X basis", hopf_c_to_x));
  add_forest(leaf(hopf, "x-to-c", "X_F in the C basis", hopf_x_to_c));
  auto* quo = leaf(hopf, "quotient", "132 quotient of M_a M_b", hopf_quotient);
  quo->add_option("--a", opt.a, "permutation")->required();
  quo->add_option("--b", opt.b, "permutation")->required();

  auto* nsym = app.add_subcommand("nsym", "noncommutative and quasi-symmetric functions")->require_subcommand(1);
  auto* emb = leaf(nsym, "embed", "basis element in the X basis", nsym_embed);
  emb->add_option("--basis", opt.basis, "S, Lambda, R or SignedR")->required();
  emb->add_option("--I", opt.I, "composition")->required();
  add_n(leaf(nsym, "table", "every ribbon R_I with |I| <= n in the X basis", nsym_table));
  auto* conv = leaf(nsym, "convert", "change of basis", nsym_convert);
  conv->add_option("--basis", opt.basis, "source basis")->required();
  conv->add_option("--to", opt.to, "target basis")->required();
  conv->add_option("--I", opt.I, "composition")->required();
  auto* gam = leaf(nsym, "gamma", "commutative image of Gamma_F", nsym_gamma);
  add_forest(gam);
  gam->add_option("--basis", opt.basis, "F or M");
  auto* xqt = leaf(nsym, "xqt", "Gamma_F on the alphabet X_{q,t}", nsym_xqt);
  add_forest(xqt);
  xqt->add_flag("--prime", opt.prime, "substitute t = 1 + (q-1)x");
  xqt->add_flag("--chapoton", opt.chapoton, "the prime value divided by 1+qx, at x = -1/q");

  auto* birk = app.add_subcommand("birkhoff", "Birkhoff factorization and the Catalan idempotents")->require_subcommand(1);
  auto* php = leaf(birk, "phi-plus", "phi+ on a forest", birkhoff_phi_plus);
  add_forest(php);
  add_spec(php);
  php->add_flag("--closed", opt.closed, "also the up-set closed form");
  for (bool plus : {true, false}) {
    auto* s = leaf(birk, plus ? "sigma-plus" : "sigma-minus", "sigma+- up to degree n",
                   [plus] { return birkhoff_sigma(plus); });
    add_n(s);
    add_spec(s);
  }
  auto* dl = leaf(birk, "d-lambda", "refined idempotent D_lambda", birkhoff_d_lambda);
  add_n(dl);
  dl->add_option("--lambda", opt.lambda, "partition")->required();
  dl->add_option("--basis", opt.basis, "C, X or R");
  auto* words = leaf(birk, "words", "the word set W(I)", birkhoff_words);
  words->add_option("--I", opt.I, "composition")->required();
  add_n(leaf(birk, "word-table", "words of length n with sum < n, by class", birkhoff_word_table));
  auto* ser = leaf(birk, "series", "the series C or D in degree n", birkhoff_series);
  add_n(ser);
  add_spec(ser);
  ser->add_option("--what", opt.what, "C or D")->required();
  auto* fac = leaf(birk, "factorization", "check sigma+ = sigma- sigma_a in degree n", birkhoff_factorization);
  add_n(fac);
  add_spec(fac);

  auto* idem = app.add_subcommand("idem", "Lie idempotents")->require_subcommand(1);
  for (auto [name, help, run] : {std::tuple{"dynkin", "Psi_n and Psibar_n", &idem_dynkin},
                                 std::tuple{"solomon", "the Solomon idempotent", &idem_solomon},
                                 std::tuple{"eulerian", "the Eulerian idempotent e_n^(k)", &idem_eulerian},
                                 std::tuple{"qsolomon", "the q-interpolation phi_n(q)", &idem_qsolomon}}) {
    auto* s = leaf(idem, name, help, run);
    add_n(s);
    s->add_option("--basis", opt.basis, "R, S, Lambda, SignedR or X");
    if (std::string(name) == "eulerian") s->add_option("--k", opt.k, "index k")->required();
  }
  add_forest(leaf(idem, "chi", "the polynomial chi_T", idem_chi));
  auto* iv = leaf(idem, "verify", "primitivity or quasi-idempotence of every family", idem_verify);
  add_n(iv);
  iv->add_option("--what", opt.what, "primitive or quasi")->required();

  auto* ehr = app.add_subcommand("ehrhart", "order polytopes of forest posets")->require_subcommand(1);
  add_forest(leaf(ehr, "poly", "Ehrhart polynomial", ehrhart_poly));
  auto* pts = leaf(ehr, "points", "lattice points of nQ", ehrhart_points);
  add_forest(pts);
  add_n(pts);
  pts->add_flag("--interior", opt.interior, "strict inequalities");
  auto* qc = leaf(ehr, "qcount", "q-count of nQ", ehrhart_qcount);
  add_forest(qc);
  add_n(qc);
  qc->add_flag("--interior", opt.interior, "the interior value at t = q^-n");
  auto* rec = leaf(ehr, "reciprocity", "reciprocity check at dilation n", ehrhart_reciprocity);
  add_forest(rec);
  add_n(rec);
  auto* eg = leaf(ehr, "gamma", "packed-word series Gamma_P", ehrhart_gamma);
  add_forest(eg);
  eg->add_flag("--signed", opt.is_signed, "(-1)^n Gamma_P(-A)");

  auto* verify = app.add_subcommand("verify", "run a named invariant suite");
  verify->add_option("suite", opt.suite, "suite name");
  verify->add_option("--n", opt.n, "size (suite default when absent)");
  verify->add_flag("--list", opt.list, "list the suites");
  verify->callback([verify] { selected = {"verify", verify, run_verify}; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  json params = params_of(selected.app);
  for (const char* global : {"max-n"})
    if (app.get_option(std::string("--") + global)->count()) params[global] = std::to_string(*opt.max_n);
  json envelope = {{"command", selected.command}, {"params", params}};
  auto fail = [&](int status, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    envelope["status"] = status;
    envelope["error"] = msg;
    if (opt.format == "json") std::cout << envelope.dump(2) << "\n";
    return status;
  };
  try {
    json result = selected.run();
    envelope["result"] = result;
    envelope["status"] = verify_status;
    emit(envelope, result);
    return verify_status;
  } catch (const CLI::Error& e) {
    return fail(kUsage, e.what());
  } catch (const std::length_error& e) {
    return fail(kCost, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kDomain, e.what());
  } catch (const std::domain_error& e) {
    return fail(kDomain, e.what());
  } catch (const std::out_of_range& e) {
    return fail(kDomain, e.what());
  }
}
