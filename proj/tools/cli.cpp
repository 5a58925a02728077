#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "l2sig/errors.hpp"
#include "l2sig/invariants.hpp"
#include "l2sig/io.hpp"
#include "l2sig/structset.hpp"
#include "l2sig/zapprox.hpp"

namespace l2sig::cli {

using nlohmann::json;

namespace {

constexpr int kDecimalDigits = 17;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

json header(const std::string& command, std::string_view input) {
  return {{"command", command},
          {"tool_version", kToolVersion},
          {"input_sha256", sha256_hex(input)},
          {"precision_bits", default_precision_bits()}};
}

json decimal_pair(const Rational& lo, const Rational& hi) {
  const Interval iv(lo, hi, 128);
  return json::array({iv.lower_string(kDecimalDigits), iv.upper_string(kDecimalDigits)});
}

std::string decimal_upper(const Rational& q) { return Interval(q, 128).upper_string(kDecimalDigits); }

json signature_json(const SignatureTriple& t) {
  return {{"n_plus", t.n_plus}, {"n_minus", t.n_minus}, {"n_zero", t.n_zero}, {"signature", t.signature()}};
}

json cyc_json(const CycNumber& v) {
  if (v.is_rational()) return to_string(v.rational_part());
  return to_string(v);
}

HermitianGroupForm require_finite(const FormDocument& doc) {
  if (const auto* f = std::get_if<HermitianGroupForm>(&doc)) return *f;
  throw DomainError("this command needs a form over a finite abelian group");
}

LaurentHermitianForm require_laurent(const FormDocument& doc) {
  if (const auto* f = std::get_if<LaurentHermitianForm>(&doc)) return *f;
  throw DomainError("this command needs a form over Z (group kind \"Z\")");
}

json invariants_command(const std::string& path, const std::optional<std::string>& scale_text, unsigned jobs) {
  const std::string text = read_file(path);
  const auto form = require_finite(parse_form(text));
  std::optional<Rational> scale;
  if (scale_text) scale = parse_exact_number(*scale_text);
  const auto report = invariant_report(form, scale, jobs);
  const auto& group = form.group;

  json out = header("invariants", text);
  out["group"] = group_to_json(group);
  out["dim"] = form.dim();
  out["sig_trivial"] = report.sig_trivial;
  out["sig_full"] = report.sig_full;
  out["sig_l2"] = to_string(report.sig_l2);
  out["alpha"] = to_string(report.alpha);

  json table = json::array();
  for (auto& [chi, triple] : report.table.entries) {
    json row = signature_json(triple);
    row["character"] = chi.weights;
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);

  const auto bits = default_precision_bits();
  json gsig = json::array();
  for (auto& g : group.elements()) {
    const CycNumber v = sig_g(report.table, g);
    const Interval re = embed(v, bits).re;
    gsig.push_back({{"element", g.residues},
                    {"value", cyc_json(v)},
                    {"enclosure", json::array({re.lower_string(kDecimalDigits), re.upper_string(kDecimalDigits)})}});
  }
  out["g_signatures"] = std::move(gsig);
  out["decimal_digits"] = kDecimalDigits;

  const auto identity = char_sum_identity(report.table);
  out["char_sum_identity"] = {{"lhs", cyc_json(identity.lhs)},
                              {"lhs_is_integer", identity.lhs_is_integer},
                              {"rhs", identity.rhs},
                              {"equal", identity.equal},
                              {"sig_full_minus_order_times_sig_trivial", report.sig_full - group.order() * report.sig_trivial}};

  if (group.factors() == std::vector<std::int64_t>{2}) out["tau_z2"] = tau_z2(report.table);
  if (scale) {
    out["scale"] = to_string(*scale);
    out["tau_l2"] = to_string(*report.tau_l2());
    if (out.contains("tau_z2")) out["tau_z2_scaled"] = to_string(Rational(out["tau_z2"].get<long>()) / *scale);
  }
  return out;
}

std::vector<GroupElement> parse_map(const std::string& text, const FiniteAbelianGroup& target) {
  std::vector<GroupElement> images;
  std::stringstream gens(text);
  std::string gen;
  while (std::getline(gens, gen, ';')) {
    std::vector<std::int64_t> residues;
    std::stringstream parts(gen);
    std::string part;
    while (std::getline(parts, part, ',')) {
      try {
        residues.push_back(std::stoll(part));
      } catch (const std::exception&) {
        throw UsageError("malformed --map entry '" + part + "'");
      }
    }
    if (residues.size() != target.rank()) throw UsageError("--map image has the wrong number of residues");
    images.push_back(target.normalize(std::move(residues)));
  }
  return images;
}

json induce_command(const std::string& path, const std::string& into, const std::optional<std::string>& map,
                    bool form_only, std::string& raw_out) {
  const std::string text = read_file(path);
  const auto form = require_finite(parse_form(text));
  const auto target = parse_group_spec(into);
  const GroupEmbedding embedding = map ? GroupEmbedding(form.group, target, parse_map(*map, target))
                                       : GroupEmbedding::canonical(form.group, target);
  const auto induced = induce(form, embedding);
  if (form_only) {
    raw_out = serialize_form(induced);
    return nullptr;
  }
  const auto before = signature_table(form), after = signature_table(induced);
  json out = header("induce", text);
  json images = json::array();
  for (auto& g : embedding.generator_images()) images.push_back(g.residues);
  out["source_group"] = group_to_json(form.group);
  out["target_group"] = group_to_json(target);
  out["generator_images"] = std::move(images);
  out["form"] = form_to_json(induced);
  out["sig_l2_source"] = to_string(sig_l2(before));
  out["sig_l2_induced"] = to_string(sig_l2(after));
  out["alpha_source"] = to_string(alpha(before));
  out["alpha_induced"] = to_string(alpha(after));
  return out;
}

json family_command(std::int64_t n, std::size_t count) {
  const std::string params = "family --n " + std::to_string(n) + " --count " + std::to_string(count);
  const auto members = generate_family(n, count);
  const ManifoldLabel base{"M", FiniteAbelianGroup::cyclic(n), 0};
  json list = json::array();
  std::vector<ManifoldLabel> labels;
  for (auto& m : members) {
    labels.push_back(act(base, m.form, "M" + std::to_string(m.multiplicity)));
    list.push_back({{"k", m.multiplicity},
                    {"dim", m.form.dim()},
                    {"alpha", to_string(m.alpha)},
                    {"tau_offset", to_string(labels.back().tau_offset)}});
  }
  bool distinct = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    distinct = distinct && distinguish(base, labels[i]);
    for (std::size_t j = i + 1; j < labels.size(); ++j) distinct = distinct && distinguish(labels[i], labels[j]);
  }
  json out = header("family", params);
  out["group"] = group_to_json(base.group);
  out["n"] = n;
  out["count"] = count;
  out["members"] = std::move(list);
  out["pairwise_distinct"] = distinct;
  return out;
}

json zapprox_command(const std::string& path, unsigned k_min, unsigned k_max, unsigned k_step,
                     const std::string& tol_text) {
  const std::string text = read_file(path);
  const auto form = require_laurent(parse_form(text));
  const Rational tol = parse_exact_number(tol_text);
  if (tol <= 0) throw UsageError("--tol must be positive");
  if (k_step == 0 || k_min == 0 || k_min > k_max) throw UsageError("need 1 <= k-min <= k-max and k-step >= 1");
  std::vector<unsigned> schedule;
  for (unsigned k = k_min; k <= k_max; k += k_step) schedule.push_back(k);

  const CircleAnalysis analysis(form);
  const auto report = convergence_report(form, schedule, tol);

  json out = header("zapprox", text);
  out["tolerance"] = tol_text;
  out["decimal_digits"] = kDecimalDigits;
  out["dim"] = form.dim();
  out["cosine_determinant"] = json::array();
  for (auto& c : analysis.cosine_determinant().coeffs()) out["cosine_determinant"].push_back(to_string(c));
  json breaks = json::array();
  for (std::size_t i = 0; i < analysis.breakpoints().size(); ++i) {
    const auto& b = analysis.breakpoints()[i];
    json entry;
    if (b.turn) {
      entry["turn"] = to_string(*b.turn);
      entry["signature_at"] = b.signature_at;
    } else {
      const auto enc = CircleAnalysis::turn_enclosure(b);
      entry["turn_enclosure"] = decimal_pair(enc.lower, enc.upper);
    }
    entry["signature_before"] = analysis.arc_signatures()[i];
    breaks.push_back(std::move(entry));
  }
  out["breakpoints"] = std::move(breaks);
  out["signature_last_arc"] = analysis.arc_signatures().back();

  json limit;
  limit["exact"] = report.limit.exact() ? json(to_string(report.limit.lower)) : json(nullptr);
  limit["interval"] = decimal_pair(report.limit.lower, report.limit.upper);
  limit["width"] = decimal_upper(report.limit.width());
  out["limit"] = std::move(limit);

  json samples = json::array();
  for (auto& s : report.samples) {
    samples.push_back({{"k", s.k}, {"value", to_string(s.value)}, {"deviation", decimal_upper(s.deviation)}});
  }
  out["samples"] = std::move(samples);
  out["max_deviation_tail"] = decimal_upper(report.max_deviation_tail);
  return out;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line.substr(0, line.find('#')));
  for (std::string t; is >> t;) tokens.push_back(t);
  return tokens;
}

json ledger_command(const std::string& path) {
  const std::string text = read_file(path);
  const auto dir = std::filesystem::path(path).parent_path();
  std::optional<FiniteAbelianGroup> group;
  std::optional<Ledger> ledger;
  json checks = json::array();

  std::istringstream lines(text);
  std::size_t lineno = 0;
  for (std::string line; std::getline(lines, line);) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what) -> void { throw ParseError("ledger script: " + what, lineno, 1); };
    try {
      if (tok[0] == "group" && tok.size() == 2) {
        if (ledger) fail("group must precede base");
        group = parse_group_spec(tok[1]);
      } else if (tok[0] == "base" && tok.size() == 2) {
        if (!group) fail("base needs a preceding group line");
        if (ledger) fail("base may appear only once");
        ledger.emplace(tok[1], *group);
      } else if (tok[0] == "act" && tok.size() == 4) {
        if (!ledger) fail("act needs a preceding base line");
        HermitianGroupForm form;
        if (tok[3].rfind("unit:", 0) == 0) {
          const auto k = std::stoul(tok[3].substr(5));
          form = HermitianGroupForm::zero_dimensional(*group);
          for (unsigned long i = 0; i < k; ++i) form = direct_sum(form, projective_unit_form(*group));
        } else {
          form = require_finite(parse_form(read_file((dir / tok[3]).string())));
        }
        ledger->act(tok[2], form, tok[1]);
      } else if (tok[0] == "distinguish" && tok.size() == 3) {
        if (!ledger) fail("distinguish needs a preceding base line");
        const auto& a = ledger->label(tok[1]);
        const auto& b = ledger->label(tok[2]);
        checks.push_back({{"a", tok[1]},
                          {"b", tok[2]},
                          {"distinguished", ledger->distinguish(tok[1], tok[2])},
                          {"tau_difference", to_string(a.tau_offset - b.tau_offset)}});
      } else {
        fail("unrecognized command '" + tok[0] + "'");
      }
    } catch (const UsageError& e) {
      throw ParseError(std::string("ledger script: ") + e.what(), lineno, 1);
    } catch (const std::invalid_argument& e) {
      throw ParseError("ledger script: malformed number", lineno, 1);
    }
  }
  if (!ledger) throw ParseError("ledger script: no base declared", lineno, 1);

  json out = header("ledger", text);
  out["group"] = group_to_json(ledger->group());
  json labels = json::array();
  for (auto& e : ledger->entries()) {
    labels.push_back({{"name", e.label.name},
                      {"parent", e.parent ? json(*e.parent) : json(nullptr)},
                      {"alpha", e.alpha ? json(to_string(*e.alpha)) : json(nullptr)},
                      {"acting_dim", e.acting_form ? json(e.acting_form->dim()) : json(nullptr)},
                      {"tau_offset", to_string(e.label.tau_offset)}});
  }
  out["labels"] = std::move(labels);
  out["distinguish"] = std::move(checks);
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact L2-signatures and Hirzebruch-type invariants of hermitian forms", "l2sig"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for per-character work")->check(CLI::Range(1u, 256u));

  std::string form_path, into, tol = "1e-6", script_path;
  std::optional<std::string> scale, map;
  bool form_only = false;
  std::int64_t n = 0;
  std::size_t count = 0;
  unsigned k_min = 1, k_max = 0, k_step = 1;

  auto* inv = app.add_subcommand("invariants", "Invariant report for a form over a finite abelian group");
  inv->add_option("file", form_path, "Form document")->required();
  inv->add_option("--scale", scale, "Bounding multiplicity r; reports tau_l2 = alpha / r");

  auto* ind = app.add_subcommand("induce", "Induce a form into a larger finite abelian group");
  ind->add_option("file", form_path, "Form document")->required();
  ind->add_option("--into", into, "Target group: trivial, cyclic:N or abelian:d1,d2,...")->required();
  ind->add_option("--map", map, "Generator images, e.g. '2' or '1,0;0,2'");
  ind->add_flag("--form-only", form_only, "Print only the induced form document");

  auto* fam = app.add_subcommand("family", "Alpha-distinguished family of projective unit forms over Z_n");
  fam->add_option("--n", n, "Cyclic group order")->required();
  fam->add_option("--count", count, "Number of members")->required();

  auto* zap = app.add_subcommand("zapprox", "Finite-quotient approximation of the L2 signature over Z");
  zap->add_option("file", form_path, "Laurent form document")->required();
  zap->add_option("--k-max", k_max, "Largest quotient order")->required();
  zap->add_option("--k-min", k_min, "Smallest quotient order");
  zap->add_option("--k-step", k_step, "Step between quotient orders");
  zap->add_option("--tol", tol, "Width bound for the L2 signature enclosure");

  auto* led = app.add_subcommand("ledger", "Run a structure-set ledger script");
  led->add_option("file", script_path, "Ledger script")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    json report;
    std::string raw;
    if (*inv) report = invariants_command(form_path, scale, jobs);
    else if (*ind) report = induce_command(form_path, into, map, form_only, raw);
    else if (*fam) report = family_command(n, count);
    else if (*zap) report = zapprox_command(form_path, k_min, k_max, k_step, tol);
    else report = ledger_command(script_path);
    if (!raw.empty()) out << raw;
    else out << report.dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace l2sig::cli
