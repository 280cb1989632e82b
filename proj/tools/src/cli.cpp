#include "pejm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pejm/pejm.hpp"

namespace pejm::cli {
namespace {

struct Options {
  std::size_t n = 0;
  std::string weight;
  std::string mu;
  std::string nu;
  std::string word;
  std::string x;
  std::string y;
  std::string base;
  std::string cls = "verma";
  int alpha = 1;
  int box = 0;
  int block = -1;
  bool shift_kac = false;
  std::string format;
  std::string kl_cache;
  bool no_kl_cache = false;
};

using Handler = std::function<Json(const Options&)>;

Weight weight_arg(const Options& o, const std::string& text, std::string_view what) {
  if (text.empty()) throw InputError("missing --" + std::string(what));
  Weight w = parse_weight(text);
  require_rank(w, o.n, what);
  return w;
}

Weight lambda(const Options& o) { return weight_arg(o, o.weight, "weight"); }

WeylElem word_arg(const Options& o, const std::string& text) {
  if (text == "e") return WeylElem::identity(o.n);
  return from_reduced_word(o.n, parse_word(text));
}

Json images(const WeylElem& w) { return Json(w.images()); }

// Key from --block i (the block of the i-th distinguished weight) or --weight.
BlockKey key_arg(const RankContext& ctx, const Options& o) {
  if (o.block >= 0) return block_key(ctx, distinguished_weight(ctx, o.block));
  return block_key(ctx, lambda(o));
}

Json weight_typical(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  const Typicality t = typicality(ctx, lam);
  Json j;
  j["weight"] = to_json(lam);
  j["typical"] = t.typical;
  j["value"] = t.value.str();
  return j;
}

Json weight_dominance(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  Json j;
  j["weight"] = to_json(lam);
  j["dominance"] = to_string(dominance_class(ctx, lam));
  return j;
}

Json weight_dot(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  const WeylElem w = word_arg(o, o.word);
  Json j;
  j["weight"] = to_json(lam);
  j["w"] = images(w);
  j["result"] = to_json(dot_action(ctx, w, lam));
  return j;
}

Json weight_hat(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  Json j;
  j["weight"] = to_json(lam);
  j["result"] = to_json(hat(ctx, lam));
  return j;
}

Json weight_leq(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  const Weight mu = weight_arg(o, o.mu, "mu");
  Json j;
  j["mu"] = to_json(mu);
  j["lambda"] = to_json(lam);
  j["leq"] = order_leq(ctx, mu, lam);
  return j;
}

Json weyl_kl(const Options& o) {
  make_context(o.n);
  const WeylElem x = word_arg(o, o.x);
  const WeylElem y = word_arg(o, o.y);
  const KLPoly p = kl_polynomial(x, y);
  Json j;
  j["x"] = images(x);
  j["y"] = images(y);
  j["polynomial"] = to_json(p);
  j["text"] = p.to_string();
  return j;
}

Json weyl_bruhat(const Options& o) {
  make_context(o.n);
  const WeylElem x = word_arg(o, o.x);
  const WeylElem y = word_arg(o, o.y);
  Json j;
  j["x"] = images(x);
  j["y"] = images(y);
  j["leq"] = bruhat_leq(x, y);
  return j;
}

Json char_super_expand(const Options& o) {
  const auto ctx = make_context(o.n);
  return to_json(verma_super_expand(ctx, lambda(o)));
}

Json char_simple_expand(const Options& o) {
  const auto ctx = make_context(o.n);
  if (!o.base.empty()) {
    const Weight base = weight_arg(o, o.base, "base");
    return to_json(simple_in_verma(ctx, base, word_arg(o, o.word)));
  }
  return to_json(simple_character(ctx, lambda(o)));
}

Json char_mult(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  const Weight nu = weight_arg(o, o.nu, "nu");
  GClass cls(Basis::VermaG0, o.n);
  if (o.cls == "verma") {
    cls = GClass::single(Basis::VermaG0, lam);
  } else if (o.cls == "super") {
    cls = verma_super_expand(ctx, lam);
  } else if (o.cls == "simple") {
    cls = simple_character(ctx, lam);
  } else {
    throw InputError("--class must be verma, super or simple");
  }
  Json j;
  j["weight"] = to_json(lam);
  j["nu"] = to_json(nu);
  j["class"] = o.cls;
  j["multiplicity"] = weight_multiplicity(cls, nu);
  return j;
}

Json block_classify(const Options& o) {
  const auto ctx = make_context(o.n);
  return to_json(block_key(ctx, lambda(o)));
}

Json block_same(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight lam = lambda(o);
  const Weight mu = weight_arg(o, o.mu, "mu");
  Json j;
  j["same"] = same_block(ctx, lam, mu);
  j["lambda_key"] = to_json(block_key(ctx, lam));
  j["mu_key"] = to_json(block_key(ctx, mu));
  return j;
}

Json block_census_cmd(const Options& o) {
  const auto ctx = make_context(o.n);
  Json j = Json::array();
  for (const auto& key : block_census(ctx, o.box)) j.push_back(to_json(key));
  return j;
}

Json oddref_trace(const Options& o) {
  const auto ctx = make_context(o.n);
  Weight start = lambda(o);
  if (o.shift_kac) start -= Rational(static_cast<std::int64_t>(o.n) - 1) * ctx.omega();
  const auto [end, trace] = br_to_b(ctx, start);
  Json j;
  j["start"] = to_json(start);
  j["end"] = to_json(end);
  j["steps"] = to_json(trace);
  return j;
}

Json oddref_socle(const Options& o) {
  const auto ctx = make_context(o.n);
  const Weight mu = lambda(o);
  Json j;
  j["weight"] = to_json(mu);
  j["socle"] = to_json(socle_of_kac(ctx, mu));
  return j;
}

Json jantzen_middle_cmd(const Options& o) {
  const auto ctx = make_context(o.n);
  const JantzenReport r = jantzen_middle(ctx, lambda(o), o.alpha);
  if (r.status == ReportStatus::Unsupported) throw UnsupportedError(r.reason);
  return to_json(r);
}

Json jantzen_witness_cmd(const Options& o) {
  const auto ctx = make_context(o.n);
  const BlockKey key = key_arg(ctx, o);
  const WitnessCertificate cert = atypical_witness(ctx, key);
  Json j;
  j["key"] = to_json(key);
  j["certificate"] = to_json(cert);
  j["valid"] = validate_witness(ctx, key, cert).ok();
  return j;
}

Json jantzen_report_cmd(const Options& o) {
  const auto ctx = make_context(o.n);
  return to_json(block_report(ctx, key_arg(ctx, o)));
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// TSV: arrays of objects become a header plus one record per line; objects
// become key/value lines.
void write_table(std::ostream& out, const Json& body) {
  if (body.is_array()) {
    if (body.empty()) return;
    if (!body.front().is_object()) {
      for (const auto& v : body) out << cell(v) << '\n';
      return;
    }
    bool first = true;
    for (const auto& [k, v] : body.front().items()) {
      out << (first ? "" : "\t") << k;
      first = false;
    }
    out << '\n';
    for (const auto& row : body) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        out << (first ? "" : "\t") << cell(v);
        first = false;
      }
      out << '\n';
    }
    return;
  }
  if (body.is_object()) {
    for (const auto& [k, v] : body.items()) out << k << '\t' << cell(v) << '\n';
    return;
  }
  out << cell(body) << '\n';
}

void emit(std::ostream& out, const Json& body, const std::string& format) {
  if (format == "table") {
    write_table(out, body);
  } else {
    out << body.dump(2) << '\n';
  }
}

std::string default_format() {
  const char* env = std::getenv("PEJM_FORMAT");
  return env && *env ? std::string(env) : std::string("json");
}

std::optional<std::filesystem::path> cache_path(const Options& o) {
  if (o.no_kl_cache) return std::nullopt;
  if (!o.kl_cache.empty()) return std::filesystem::path(o.kl_cache);
  const char* env = std::getenv("PEJM_KL_CACHE");
  if (env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.format = default_format();
  CLI::App app{"BGG category O tools for the periplectic Lie superalgebra pe(n)", "pejm"};
  app.require_subcommand(1);
  // Global flags are accepted before the command and on every leaf.
  auto add_globals = [&o](CLI::App* a) {
    a->add_option("--format", o.format, "Output format (default from PEJM_FORMAT, else json)")
        ->check(CLI::IsMember({"json", "table"}));
    a->add_option("--kl-cache", o.kl_cache, "KL cache file (default from PEJM_KL_CACHE)");
    a->add_flag("--no-kl-cache", o.no_kl_cache, "Do not read or write a KL cache file");
  };
  add_globals(&app);

  const Handler* chosen = nullptr;
  std::map<std::string, Handler> handlers;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = group->add_subcommand(name, help);
    handlers[group->get_name() + " " + name] = std::move(h);
    const Handler* ptr = &handlers[group->get_name() + " " + name];
    sub->callback([&chosen, ptr] { chosen = ptr; });
    sub->add_option("--n", o.n, "Rank n of pe(n)")->required()->check(CLI::Range(1, 64));
    add_globals(sub);
    return sub;
  };
  auto with_weight = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--weight", o.weight, "Weight as comma-separated rationals");
    if (required) opt->required();
    return sub;
  };

  CLI::App* weight = app.add_subcommand("weight", "Weight-lattice operations");
  weight->require_subcommand(1);
  with_weight(leaf(weight, "typical", "Typicality value T(lambda)", weight_typical));
  with_weight(leaf(weight, "dominance", "Dominance class", weight_dominance));
  with_weight(leaf(weight, "dot", "Dot action w . lambda", weight_dot))
      ->add_option("--word", o.word, "Word in simple reflections, e.g. 1,2,1");
  with_weight(leaf(weight, "hat", "The involution lambda -> hat(lambda)", weight_hat));
  with_weight(leaf(weight, "leq", "Whether mu <= lambda", weight_leq))
      ->add_option("--mu", o.mu)->required();

  CLI::App* weyl = app.add_subcommand("weyl", "Symmetric group operations");
  weyl->require_subcommand(1);
  for (const auto& [name, help, h] :
       {std::tuple{"kl", "Kazhdan-Lusztig polynomial P_{x,y}", Handler(weyl_kl)},
        std::tuple{"bruhat", "Bruhat comparison x <= y", Handler(weyl_bruhat)}}) {
    CLI::App* sub = leaf(weyl, name, help, h);
    sub->add_option("--x", o.x, "Word for x ('e' for the identity)")->required();
    sub->add_option("--y", o.y, "Word for y ('e' for the identity)")->required();
  }

  CLI::App* chr = app.add_subcommand("char", "Grothendieck-group classes");
  chr->require_subcommand(1);
  with_weight(leaf(chr, "super-expand", "ch of the Verma supermodule in g0-Vermas", char_super_expand));
  CLI::App* simple = with_weight(
      leaf(chr, "simple-expand", "Simple g0-character in g0-Vermas (--weight, or --base with --word)",
           char_simple_expand),
      false);
  simple->add_option("--base", o.base, "Regular antidominant base weight");
  simple->add_option("--word", o.word, "Word for w");
  CLI::App* mult = with_weight(leaf(chr, "mult", "Weight multiplicity at nu", char_mult));
  mult->add_option("--nu", o.nu)->required();
  mult->add_option("--class", o.cls, "verma, super or simple")->check(CLI::IsMember({"verma", "super", "simple"}));

  CLI::App* block = app.add_subcommand("block", "Block decomposition");
  block->require_subcommand(1);
  with_weight(leaf(block, "classify", "Block key of a weight", block_classify));
  with_weight(leaf(block, "same", "Whether two weights share a block", block_same))
      ->add_option("--mu", o.mu)->required();
  leaf(block, "census", "Distinct keys over integer weights in [-box, box]^n", block_census_cmd)
      ->add_option("--box", o.box)->required();

  CLI::App* oddref = app.add_subcommand("oddref", "Odd reflections");
  oddref->require_subcommand(1);
  with_weight(leaf(oddref, "trace", "Highest weight transport from b^r to b", oddref_trace))
      ->add_flag("--shift-kac", o.shift_kac, "Start from weight - (n-1) omega (socle of the Kac module)");
  with_weight(leaf(oddref, "socle-kac", "Highest weight of soc K(L(mu))", oddref_socle));

  CLI::App* jantzen = app.add_subcommand("jantzen", "Jantzen middles");
  jantzen->require_subcommand(1);
  with_weight(leaf(jantzen, "middle", "Jantzen middle U_alpha(lambda)", jantzen_middle_cmd))
      ->add_option("--alpha", o.alpha, "Simple root index i (eps_i - eps_{i+1})");
  for (const auto& [name, help, h] :
       {std::tuple{"witness", "Non-semisimple witness for an atypical block", Handler(jantzen_witness_cmd)},
        std::tuple{"report", "Block verdict", Handler(jantzen_report_cmd)}}) {
    CLI::App* sub = with_weight(leaf(jantzen, name, help, h), false);
    sub->add_option("--block", o.block, "Index i of the block of the i-th distinguished weight");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (!chosen) {
    err << "error: no command given\n";
    return kExitInput;
  }

  try {
    const auto cache = cache_path(o);
    if (cache && std::filesystem::exists(*cache)) KLCache::global().load(*cache);
    const Json body = (*chosen)(o);
    if (cache) KLCache::global().save(*cache);
    emit(out, body, o.format);
    return kExitOk;
  } catch (const UnsupportedError& e) {
    Json body;
    body["unsupported"] = e.what();
    emit(out, body, o.format);
    return kExitUnsupported;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace pejm::cli
