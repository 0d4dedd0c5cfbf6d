#include "cartierlab/cli.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "cartierlab/artinian.hpp"
#include "cartierlab/config.hpp"

namespace cartierlab {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Field parse_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": field must be a string");
  std::string s = v.get<std::string>();
  if (s == "QQ") return Field::rationals();
  if (s.rfind("FP(", 0) == 0 && s.size() > 4 && s.back() == ')') {
    std::string digits = s.substr(3, s.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError(where + ": bad field '" + s + "'");
    return Field::prime(std::stoull(digits));
  }
  throw InputError(where + ": unknown field '" + s + "' (QQ or FP(p))");
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw InputError(where + " must be a list of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

void allow_keys(const json& section, const std::string& name, std::initializer_list<const char*> keys) {
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : section.items())
    if (!ok.count(k)) throw InputError("[" + name + "]: unknown key '" + k + "'");
}

RingSpec parse_ring_section(const json& sec, const std::string& name) {
  allow_keys(sec, name, {"field", "vars", "relations"});
  if (!sec.contains("field")) throw InputError("[" + name + "]: missing field");
  RingSpec r{parse_field(sec["field"], "[" + name + "]"), {}, {}};
  if (sec.contains("vars")) r.vars = string_list(sec["vars"], "[" + name + "] vars");
  if (sec.contains("relations")) r.relations = string_list(sec["relations"], "[" + name + "] relations");
  return r;
}

std::int64_t nonneg(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw InputError(where + " must be a nonnegative integer");
  return v.get<std::int64_t>();
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& xs, const Ring& r, const std::string& where) {
  std::vector<Polynomial> out;
  for (const auto& s : xs) {
    try {
      out.push_back(parse_polynomial(s, r));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return out;
}

ExtensionHints parse_hints(const json& h, const Ring& ra, const Ring& rb) {
  ExtensionHints out;
  if (h.contains("finite")) {
    if (!h["finite"].is_boolean()) throw InputError("[hints] finite must be a boolean");
    out.finite = h["finite"].get<bool>();
  }
  if (h.contains("birational")) {
    if (!h["birational"].is_boolean()) throw InputError("[hints] birational must be a boolean");
    out.birational = h["birational"].get<bool>();
  }
  if (h.contains("module_generators"))
    out.module_generators =
        parse_all(string_list(h["module_generators"], "[hints] module_generators"), rb, "[hints] module_generators");
  if (h.contains("fractions")) {
    if (!h["fractions"].is_array()) throw InputError("[hints] fractions must be a list of pairs");
    for (const auto& pair : h["fractions"]) {
      auto strs = string_list(pair, "[hints] fractions entry");
      if (strs.size() != 2) throw InputError("[hints] fractions entries are [numerator, denominator]");
      auto ps = parse_all(strs, ra, "[hints] fractions");
      out.fractions.emplace_back(ps[0], ps[1]);
    }
  }
  if (h.contains("lpic_A_rank")) out.lpic_A_rank = nonneg(h["lpic_A_rank"], "[hints] lpic_A_rank");
  if (h.contains("lpic_B_rank")) out.lpic_B_rank = nonneg(h["lpic_B_rank"], "[hints] lpic_B_rank");
  if (h.contains("lpic_kernel_rank")) out.lpic_kernel_rank = nonneg(h["lpic_kernel_rank"], "[hints] lpic_kernel_rank");
  if (h.contains("expected_li_rank")) out.expected_li_rank = nonneg(h["expected_li_rank"], "[hints] expected_li_rank");
  return out;
}

json envelope(const std::string& command, const std::string& input, const std::string& digest) {
  json r;
  r["tool"] = "cartierlab";
  r["version"] = kToolVersion;
  r["command"] = command;
  r["input"] = input.empty() ? json(nullptr) : json(input);
  r["input_digest"] = digest.empty() ? json(nullptr) : json("sha256:" + digest);
  r["results"] = json::object();
  r["warnings"] = json::array();
  return r;
}

json presentation_json(const Extension& e) {
  json rels = json::array(), imgs = json::array();
  for (const auto& g : e.a().groebner()) rels.push_back(g.to_string());
  for (const auto& im : e.images()) imgs.push_back(im.to_string());
  return {{"vars", e.a_ring()->variables()}, {"relations", rels}, {"images", imgs}};
}

void note_injectivity(json& report, const Extension& e) {
  if (e.injectivity_assumed())
    report["warnings"].push_back("injectivity assumed (--assume-injective), not checked");
}

std::string file_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Ideal RingSpec::ideal() const {
  Ring r = PolyRing::make(field, vars);
  return Ideal(r, parse_all(relations, r, "relations"));
}

ExtensionFile parse_extension_text(const std::string& text, const std::string& name) {
  json doc = parse_config(text);
  ExtensionFile f;
  f.name = name;
  f.digest = sha256_hex(text);
  for (const auto& [sec, body] : doc.items()) {
    if (sec == "ring.A") {
      f.a = parse_ring_section(body, sec);
    } else if (sec == "ring.B") {
      f.b = parse_ring_section(body, sec);
    } else if (sec == "map") {
      allow_keys(body, sec, {"images"});
      if (body.contains("images")) f.images = string_list(body["images"], "[map] images");
    } else if (sec == "hints") {
      allow_keys(body, sec,
                 {"finite", "birational", "module_generators", "fractions", "lpic_A_rank", "lpic_B_rank",
                  "lpic_kernel_rank", "expected_li_rank"});
      f.hints = body;
    } else if (sec == "rankdata") {
      allow_keys(body, sec, {"c_A", "c_B", "lpic_A", "lpic_B", "lpic_kernel"});
      RankData d;
      for (const char* k : {"c_A", "c_B", "lpic_A", "lpic_B", "lpic_kernel"})
        if (!body.contains(k)) throw InputError("[rankdata]: missing " + std::string(k));
      d.c_A = nonneg(body["c_A"], "[rankdata] c_A");
      d.c_B = nonneg(body["c_B"], "[rankdata] c_B");
      d.lpic_A = nonneg(body["lpic_A"], "[rankdata] lpic_A");
      d.lpic_B = nonneg(body["lpic_B"], "[rankdata] lpic_B");
      d.lpic_kernel = nonneg(body["lpic_kernel"], "[rankdata] lpic_kernel");
      f.rankdata = d;
    } else if (sec == "meta") {
      allow_keys(body, sec, {"name", "description"});
      f.meta = body;
    } else if (sec.empty()) {
      throw InputError("keys outside any section");
    } else {
      throw InputError("unknown section [" + sec + "]");
    }
  }
  if (f.a.has_value() != f.b.has_value()) throw InputError("[ring.A] and [ring.B] must both be present");
  if (!f.a && !f.rankdata) throw InputError("file has neither rings nor [rankdata]");
  if (f.a && f.images.size() != f.a->vars.size())
    throw InputError("[map] images: expected " + std::to_string(f.a->vars.size()) + " images");
  return f;
}

ExtensionFile load_extension_file(const std::string& path) {
  return parse_extension_text(read_file(path), file_name(path));
}

Extension build_extension(const ExtensionFile& file, bool assume_injective) {
  if (!file.a) throw InputError(file.name + " has no presented rings");
  if (file.a->field != file.b->field) throw InputError("A and B must have the same field");
  Ideal ia = file.a->ideal();
  Ideal ib = file.b->ideal();
  auto images = parse_all(file.images, ib.ring(), "[map] images");
  return Extension::make(ia, ib, std::move(images), parse_hints(file.hints, ia.ring(), ib.ring()), assume_injective);
}

Base load_base_file(const std::string& path, std::string* digest) {
  std::string text = read_file(path);
  json doc = parse_config(text);
  if (digest) *digest = sha256_hex(text);
  for (const auto& [sec, body] : doc.items())
    if (sec != "ring" && sec != "meta") throw InputError("unknown section [" + sec + "] in a base file");
  if (!doc.contains("ring")) throw InputError(path + ": missing [ring] section");
  RingSpec spec = parse_ring_section(doc["ring"], "ring");
  auto alg = FiniteAlgebra::quotient(spec.ideal());
  if (alg.dim() == 0) throw InputError(path + ": the base ring is the zero ring");
  return std::make_shared<const FiniteAlgebra>(std::move(alg));
}

std::vector<std::vector<Polynomial>> parse_primes(const std::string& text, const Ring& ring) {
  std::vector<std::vector<Polynomial>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::string s = item;
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    auto b = s.find_last_not_of(" \t");
    s = s.substr(a, b - a + 1);
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<Polynomial> gens;
    std::stringstream gs(s);
    std::string g;
    while (std::getline(gs, g, ',')) gens.push_back(parse_polynomial(g, ring));
    if (gens.empty()) throw InputError("empty prime in --primes");
    out.push_back(std::move(gens));
  }
  return out;
}

CommandResult cmd_check(const std::string& path, const CliOptions& opts) {
  ExtensionFile f = load_extension_file(path);
  CommandResult r{envelope("check", f.name, f.digest), "", 0};
  json& res = r.report["results"];
  std::ostringstream text;
  text << f.name << ": ";
  if (!f.a) {
    res["well_defined"] = nullptr;
    res["injective"] = nullptr;
    res["detail"] = "rank data only; no presented rings to check";
    text << "rank data only, nothing to check\n";
    r.text = text.str();
    return r;
  }
  try {
    Extension e = build_extension(f, opts.assume_injective);
    res["well_defined"] = true;
    res["injective"] = e.injectivity_assumed() ? json("assumed") : json(true);
    res["detail"] = e.describe();
    note_injectivity(r.report, e);
    text << "well-defined: pass\ninjective: " << (e.injectivity_assumed() ? "assumed" : "pass") << "\n"
         << e.describe() << "\n";
  } catch (const MathError& e) {
    if (e.kind() == "NotWellDefined") {
      res["well_defined"] = false;
      res["injective"] = "not checked";
      text << "well-defined: FAIL\n";
    } else if (e.kind() == "NotInjective") {
      res["well_defined"] = true;
      res["injective"] = false;
      text << "well-defined: pass\ninjective: FAIL\n";
    } else {
      throw;
    }
    res["detail"] = e.what();
    text << e.what() << "\n";
    r.exit_code = 1;
  }
  r.text = text.str();
  return r;
}

CommandResult cmd_stalks(const std::string& path, const CliOptions& opts) {
  ExtensionFile f = load_extension_file(path);
  Extension e = build_extension(f, opts.assume_injective);
  CommandResult r{envelope("stalks", f.name, f.digest), "", 0};
  note_injectivity(r.report, e);
  auto primes = parse_primes(opts.primes, e.a_ring());
  std::vector<StalkReport> rows;
  for (const auto& p : primes) rows.push_back(stalk_rank(e, p));
  if (opts.generic) rows.push_back(generic_stalk(e));
  json table = json::array();
  std::ostringstream text;
  text << f.name << ": " << (e.hints().finite.value_or(false) ? "henselized stalks" : "fiber components only")
       << "\n";
  for (const auto& s : rows) {
    table.push_back(s.to_json());
    text << "  " << std::left << std::setw(24) << s.prime << " components "
         << (s.fiber_components.known() ? std::to_string(*s.fiber_components.value) : "Unknown") << "  stalk "
         << (s.stalk_rank ? std::to_string(*s.stalk_rank) : "Unknown") << (s.empty ? "  (empty fiber)" : "")
         << "  over " << s.residue_field << "\n";
    if (!s.fiber_components.known())
      r.report["warnings"].push_back("stalk at " + s.prime + " unknown: " + s.fiber_components.reason);
  }
  if (rows.empty()) r.report["warnings"].push_back("no primes requested (use --primes or --generic)");
  r.report["results"]["stalks"] = table;
  r.text = text.str();
  return r;
}

CommandResult cmd_li(const std::string& path, const CliOptions& opts) {
  ExtensionFile f = load_extension_file(path);
  CommandResult r{envelope("li", f.name, f.digest), "", 0};
  LIResult li;
  if (!f.a) {
    if (opts.method != "auto" && opts.method != "fiveterm")
      throw InputError(f.name + " holds rank data only; use --method fiveterm");
    li = li_five_term(*f.rankdata);
    li.certificate["source"] = "[rankdata]";
  } else {
    Extension e = build_extension(f, opts.assume_injective);
    note_injectivity(r.report, e);
    if (f.rankdata && opts.method == "fiveterm") {
      li = li_five_term(*f.rankdata);
      li.certificate["source"] = "[rankdata]";
    } else {
      li = li_by_method(e, opts.method, parse_primes(opts.primes, e.a_ring()), true);
    }
  }
  json& res = r.report["results"];
  res["li"] = li.to_json();
  if (f.hints.contains("expected_li_rank")) res["expected_rank_recorded"] = f.hints["expected_li_rank"];
  if (!li.is_known()) r.report["warnings"].push_back("LI " + to_string(li.status) + ": " + li.reason);
  std::ostringstream text;
  text << f.name << ": LI rank ";
  if (li.is_known())
    text << *li.rank << " via " << to_string(*li.method) << "\n";
  else
    text << to_string(li.status) << " (" << li.reason << ")\n";
  if (res.contains("expected_rank_recorded"))
    text << "  recorded expectation (not computed): " << res["expected_rank_recorded"].dump() << "\n";
  r.text = text.str();
  return r;
}

CommandResult cmd_closure(const std::string& path, WitnessKind kind, const CliOptions& opts) {
  ExtensionFile f = load_extension_file(path);
  Extension e = build_extension(f, opts.assume_injective);
  CommandResult r{envelope(to_string(kind), f.name, f.digest), "", 0};
  note_injectivity(r.report, e);
  ClosureResult c = closure_search(e, kind, opts.bound);
  json& res = r.report["results"];
  json ws = json::array();
  for (const auto& w : c.witnesses) ws.push_back(w.to_string());
  res["kind"] = to_string(kind);
  res["bound"] = opts.bound;
  res["witnesses"] = ws;
  res["witness"] = c.witnesses.empty() ? json(nullptr) : json(c.witnesses.front().to_string());
  res["exhausted"] = c.exhausted;
  res["candidates_tested"] = c.candidates_tested;
  res["closure"] = presentation_json(c.extension);
  std::string label = (kind == WitnessKind::Seminormal ? "seminormalization" : "anodal closure");
  res["label"] = label + " up to degree " + std::to_string(opts.bound);
  std::string verdict;
  if (!c.witnesses.empty())
    verdict = "witness found";
  else if (!c.exhausted)
    verdict = "A = B";
  else
    verdict = "no witness up to degree " + std::to_string(opts.bound);
  res["verdict"] = verdict;
  if (kind == WitnessKind::Seminormal) {
    NIVerdict ni = ni_verdict(e, opts.bound);
    res["ni"] = ni.to_json();
    NilComparison nil = nil_comparison(e);
    res["nil_comparison"] = {{"status", to_string(nil.status)}, {"reason", nil.reason}};
  }
  std::ostringstream text;
  text << f.name << ": " << to_string(kind) << " search, bound " << opts.bound << ": " << verdict << "\n";
  for (const auto& w : c.witnesses) text << "  adjoined " << w.to_string() << "\n";
  text << "  " << res["label"].get<std::string>() << ": " << presentation(c.extension.a()) << "\n";
  r.text = text.str();
  return r;
}

CommandResult cmd_terms(const CliOptions& opts) {
  CommandResult r{envelope("terms", "", ""), "", 0};
  json terms = json::array();
  std::ostringstream text;
  text << "n = " << opts.n << ":";
  for (const auto& [label, count] : decomposition_terms(opts.n)) {
    json c = count.fits_slong_p() ? json(count.get_si()) : json(count.get_str());
    terms.push_back({{"term", label}, {"count", c}});
    text << " " << label << " x" << count.get_str();
  }
  r.report["results"] = {{"n", opts.n}, {"terms", terms}};
  r.text = text.str() + "\n";
  return r;
}

CommandResult cmd_units(const CliOptions& opts) {
  if (opts.base.empty()) throw InputError("units needs --base <file>");
  if (opts.laurent.empty()) throw InputError("units needs --laurent <expression>");
  std::string digest;
  Base base = load_base_file(opts.base, &digest);
  CommandResult r{envelope("units", file_name(opts.base), digest), "", 0};
  LaurentElement x = parse_laurent(opts.laurent, base);
  json& res = r.report["results"];
  res["element"] = x.to_string();
  auto lu = lu_rank(*base);
  res["lu_rank"] = lu.known() ? json(*lu.value) : json("Unknown: " + lu.reason);
  auto unit = is_laurent_unit(x);
  std::ostringstream text;
  text << x.to_string() << " over " << presentation(base->ideal()) << "\n";
  if (!unit.known()) {
    res["is_unit"] = "Unknown: " + unit.reason;
    res["decomposition"] = nullptr;
    r.report["warnings"].push_back("unit test undecided: " + unit.reason);
    text << "  unit: Unknown\n";
    r.text = text.str();
    return r;
  }
  res["is_unit"] = *unit.value;
  if (!*unit.value) {
    res["decomposition"] = nullptr;
    text << "  not a unit\n";
    r.text = text.str();
    return r;
  }
  auto d = bass_decompose(x);
  json ids = json::array();
  for (const auto& e : d.idempotents) ids.push_back(base->to_string(e));
  res["decomposition"] = {{"u0", base->to_string(d.u0)},
                          {"idempotents", ids},
                          {"exponents", d.exponents},
                          {"p_part", d.p_part.to_string()},
                          {"q_part", d.q_part.to_string()},
                          {"recomposes", d.recompose() == x}};
  text << "  u0 = " << base->to_string(d.u0) << "\n  exponents =";
  for (std::size_t i = 0; i < d.exponents.size(); ++i)
    text << " " << d.exponents[i] << " at " << base->to_string(d.idempotents[i]);
  text << "\n  p = " << d.p_part.to_string() << "\n  q = " << d.q_part.to_string() << "\n";
  r.text = text.str();
  return r;
}

namespace {

CliOptions case_options(const json& o, const std::string& dir, const CliOptions& outer) {
  CliOptions c;
  c.pair_budget = outer.pair_budget;
  for (const auto& [k, v] : o.items()) {
    if (k == "bound") c.bound = v.get<unsigned>();
    else if (k == "primes") c.primes = v.get<std::string>();
    else if (k == "generic") c.generic = v.get<bool>();
    else if (k == "method") c.method = v.get<std::string>();
    else if (k == "assume_injective") c.assume_injective = v.get<bool>();
    else if (k == "n") c.n = v.get<unsigned>();
    else if (k == "base") c.base = (std::filesystem::path(dir) / v.get<std::string>()).string();
    else if (k == "laurent") c.laurent = v.get<std::string>();
    else throw InputError("expected.json: unknown option '" + k + "'");
  }
  return c;
}

}  // namespace

CommandResult cmd_corpus(const std::string& dir, const CliOptions& opts) {
  std::string path = (std::filesystem::path(dir) / "expected.json").string();
  json suite;
  try {
    suite = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  CommandResult r{envelope("corpus", "expected.json", sha256_hex(read_file(path))), "", 0};
  json cases = json::array();
  std::ostringstream text;
  std::size_t passed = 0, failed = 0;
  for (const auto& c : suite.at("cases")) {
    std::string id = c.at("id").get<std::string>();
    std::string command = c.at("command").get<std::string>();
    std::string file = c.contains("file") ? (std::filesystem::path(dir) / c["file"].get<std::string>()).string() : "";
    CliOptions co = case_options(c.value("options", json::object()), dir, opts);
    CommandResult out = run_command(command, file, co);
    json mismatches = json::array();
    int want_exit = c.value("exit", 0);
    if (out.exit_code != want_exit)
      mismatches.push_back({{"path", "exit_code"}, {"expected", want_exit}, {"actual", out.exit_code}});
    json expect = c.value("expect", json::object());
    for (auto it = expect.begin(); it != expect.end(); ++it) {
      const std::string ptr = it.key();
      const json& want = it.value();
      json::json_pointer p(ptr);
      json actual = out.report.contains(p) ? out.report[p] : json("<missing>");
      if (actual != want) mismatches.push_back({{"path", ptr}, {"expected", want}, {"actual", actual}});
    }
    bool ok = mismatches.empty();
    (ok ? passed : failed)++;
    cases.push_back({{"id", id}, {"pass", ok}, {"mismatches", mismatches}, {"report", out.report}});
    text << (ok ? "PASS " : "FAIL ") << id << "\n";
    for (const auto& m : mismatches)
      text << "     " << m["path"].get<std::string>() << ": expected " << m["expected"].dump() << ", got "
           << m["actual"].dump() << "\n";
  }
  r.report["results"] = {{"cases", cases}, {"passed", passed}, {"failed", failed}};
  text << passed << " passed, " << failed << " failed\n";
  r.text = text.str();
  r.exit_code = failed ? 1 : 0;
  return r;
}

CommandResult run_command(const std::string& command, const std::string& file, const CliOptions& opts) {
  set_pair_budget(opts.pair_budget);
  std::uint64_t before = pairs_used();
  auto error = [&](int code, const std::string& kind, const std::string& msg) {
    CommandResult r{envelope(command, file.empty() ? "" : file_name(file), ""), "", code};
    r.report["error"] = {{"kind", kind}, {"message", msg}};
    r.text = "error: " + msg + "\n";
    return r;
  };
  CommandResult r;
  try {
    auto need_file = [&] {
      if (file.empty()) throw InputError(command + " needs an input file");
    };
    if (command == "check") need_file(), r = cmd_check(file, opts);
    else if (command == "stalks") need_file(), r = cmd_stalks(file, opts);
    else if (command == "li") need_file(), r = cmd_li(file, opts);
    else if (command == "seminormal") need_file(), r = cmd_closure(file, WitnessKind::Seminormal, opts);
    else if (command == "anodal") need_file(), r = cmd_closure(file, WitnessKind::Anodal, opts);
    else if (command == "terms") r = cmd_terms(opts);
    else if (command == "units") r = cmd_units(opts);
    else if (command == "corpus") r = cmd_corpus(file.empty() ? CARTIERLAB_CORPUS_DIR : file, opts);
    else throw InputError("unknown command '" + command + "'");
  } catch (const InputError& e) {
    return error(2, "InputError", e.what());
  } catch (const MathError& e) {
    return error(2, e.kind(), e.what());
  } catch (const ResourceLimit& e) {
    return error(3, "ResourceLimit", e.what());
  } catch (const InternalError& e) {
    return error(4, "InternalError", e.what());
  }
  if (command != "corpus")
    r.report["budget"] = {{"pair_budget", opts.pair_budget}, {"pairs_used", pairs_used() - before}};
  return r;
}

std::string render(const CommandResult& r, bool as_json) {
  if (as_json) return r.report.dump(2) + "\n";
  std::string out = r.text;
  for (const auto& w : r.report.value("warnings", json::array())) out += "warning: " + w.get<std::string>() + "\n";
  return out;
}

}  // namespace cartierlab
