// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "l2sig/invariants.hpp"
#include "l2sig/io.hpp"
#include "l2sig/structset.hpp"
#include "l2sig/zapprox.hpp"
#include "support.hpp"

namespace {

using namespace l2sig;
using testing::Rng;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Forms collected by A2-A4 and reused by A5.
std::vector<HermitianGroupForm> g_identity_corpus;

FiniteAbelianGroup random_group(Rng& rng) {
  static const std::vector<FiniteAbelianGroup> pool = [] {
    std::vector<FiniteAbelianGroup> p{FiniteAbelianGroup()};
    for (std::int64_t n = 2; n <= 12; ++n) p.push_back(FiniteAbelianGroup::cyclic(n));
    p.emplace_back(std::vector<std::int64_t>{2, 2});
    p.emplace_back(std::vector<std::int64_t>{2, 4});
    p.emplace_back(std::vector<std::int64_t>{3, 3});
    p.emplace_back(std::vector<std::int64_t>{2, 2, 2});
    return p;
  }();
  return pool[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
}

Outcome a1() {
  Outcome o;
  for (std::int64_t n = 2; n <= 50; ++n) {
    const Rational a = alpha(projective_unit_form(FiniteAbelianGroup::cyclic(n)));
    if (a != ratio(1, n) - 1) {
      o.pass = false;
      o.detail = "n=" + std::to_string(n) + " gave " + to_string(a);
      return o;
    }
  }
  o.detail = "alpha = 1/n - 1 for n = 2..50";
  return o;
}

Outcome a2() {
  Outcome o;
  Rng rng(1002);
  int passed = 0;
  for (int t = 0; t < 200; ++t) {
    const auto m = testing::random_symmetric(rng, testing::uniform(rng, 1, 5), 9);
    const auto g = FiniteAbelianGroup::cyclic(testing::uniform(rng, 2, 12));
    const auto r = atiyah_check(m, g);
    const bool ok = r.passed && r.alpha == 0 && r.sig_l2 == r.base_signature &&
                    r.base_signature == signature_scalar(m).signature();
    passed += ok;
    g_identity_corpus.push_back(induce(HermitianGroupForm::from_rational(FiniteAbelianGroup(), m),
                                       GroupEmbedding::canonical(FiniteAbelianGroup(), g)));
  }
  o.pass = passed == 200;
  o.detail = std::to_string(passed) + "/200 induced forms with alpha = 0 and sig_l2 = base signature";
  return o;
}

Outcome a3() {
  Outcome o;
  Rng rng(1003);
  int pairs = 0, checks = 0, passed = 0;
  for (std::int64_t n = 1; n <= 24; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (n % m) continue;
      ++pairs;
      const auto h = FiniteAbelianGroup::cyclic(m), g = FiniteAbelianGroup::cyclic(n);
      const auto emb = GroupEmbedding::canonical(h, g);
      for (int t = 0; t < 20; ++t) {
        const auto f = testing::random_form(rng, h, testing::uniform(rng, 1, 3));
        const auto induced = induce(f, emb);
        ++checks;
        passed += sig_l2(induced) == sig_l2(f);
        if (t < 2) {
          g_identity_corpus.push_back(f);
          g_identity_corpus.push_back(induced);
        }
      }
    }
  }
  o.pass = passed == checks;
  o.detail = std::to_string(passed) + "/" + std::to_string(checks) + " over " + std::to_string(pairs) +
             " divisor pairs m | n <= 24";
  return o;
}

Outcome a4() {
  Outcome o;
  Rng rng(1004);
  int passed = 0;
  for (int t = 0; t < 500; ++t) {
    const auto g = random_group(rng);
    const auto a = testing::random_form(rng, g, testing::uniform(rng, 0, 3));
    const auto b = testing::random_form(rng, g, testing::uniform(rng, 0, 3));
    const auto s = direct_sum(a, b);
    passed += alpha(s) == alpha(a) + alpha(b);
    if (t % 5 == 0) {
      g_identity_corpus.push_back(a);
      g_identity_corpus.push_back(b);
      g_identity_corpus.push_back(s);
    }
  }
  o.pass = passed == 500;
  o.detail = std::to_string(passed) + "/500 pairs";
  return o;
}

Outcome a5() {
  Outcome o;
  std::size_t passed = 0;
  for (auto& f : g_identity_corpus) {
    const auto table = signature_table(f);
    const auto r = char_sum_identity(table);
    const long expected = f.group.order() * sig_trivial(table) - sig_full(table);
    passed += r.equal && r.lhs_is_integer && r.rhs == expected && r.lhs == CycNumber(Rational(expected));
  }
  o.pass = passed == g_identity_corpus.size() && !g_identity_corpus.empty();
  o.detail = std::to_string(passed) + "/" + std::to_string(g_identity_corpus.size()) + " forms from A2-A4";
  return o;
}

Outcome a6() {
  Outcome o;
  LaurentPolynomial p;
  p.add_term(-1, 1);
  p.add_term(0, 1);
  p.add_term(1, 1);
  const auto form = LaurentHermitianForm::one_by_one(p);
  const Rational third(1, 3);
  const CircleAnalysis analysis(form);
  Rational worst = 0;
  unsigned worst_k = 0;
  for (unsigned k = 6; k <= 10000; ++k) {
    const Rational dev = abs(analysis.finite_quotient_sig(k) - third);
    if (dev * k > worst * (worst_k ? worst_k : 1)) worst = dev, worst_k = k;
    if (dev > ratio(2, k)) {
      o.pass = false;
      o.detail = "k=" + std::to_string(k) + " deviates by " + to_string(dev);
      return o;
    }
  }
  // Cross-check the counting path against exact evaluation at every root.
  for (unsigned k = 6; k <= 120; ++k) {
    if (analysis.finite_quotient_sig(k) != finite_quotient_sig_direct(form, k)) {
      o.pass = false;
      o.detail = "fast and direct quotient signatures differ at k=" + std::to_string(k);
      return o;
    }
  }
  const auto enc = sig_l2_circle(form, Rational(1, 1000000));
  o.pass = enc.contains(third) && enc.width() <= Rational(1, 1000000);
  o.detail = "max k*|dev| = " + to_string(worst * (worst_k ? worst_k : 1)) + " over k = 6..10000; enclosure [" +
             to_string(enc.lower) + ", " + to_string(enc.upper) + "]";
  return o;
}

Outcome a7() {
  Outcome o;
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  const auto family = generate_family(3, 10);
  Ledger ledger("M", z3);
  std::vector<ManifoldLabel> labels;
  bool ok = family.size() == 10;
  for (auto& m : family) {
    ok = ok && m.alpha != 0 && m.alpha == ratio(-2 * static_cast<long>(m.multiplicity), 3);
    const auto name = "M" + std::to_string(m.multiplicity);
    labels.push_back(ledger.act("M", m.form, name));
    ok = ok && labels.back().tau_offset == -m.alpha;
  }
  int distinct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) distinct += distinguish(labels[i], labels[j]);
  }
  o.pass = ok && distinct == 45;
  o.detail = std::to_string(distinct) + "/45 pairs distinguished; offsets equal -alpha";
  return o;
}

Outcome a8() {
  Outcome o;
  Rng rng(1008);
  int rational_ok = 0, rational_total = 0, skipped = 0;
  while (rational_total < 1000) {
    const auto m = testing::random_symmetric(rng, testing::uniform(rng, 1, 8), 9);
    const auto oracle = testing::float_inertia(m);
    if (oracle.min_abs_eigenvalue < 1e-6) {
      ++skipped;
      continue;
    }
    ++rational_total;
    rational_ok += signature_scalar(m) == oracle.triple;
  }
  int cyc_ok = 0, cyc_total = 0;
  while (cyc_total < 200) {
    const auto m = testing::random_hermitian_cyc(rng, testing::uniform(rng, 1, 4), 12);
    const auto oracle = testing::float_inertia(m);
    if (oracle.min_abs_eigenvalue < 1e-6) continue;
    ++cyc_total;
    cyc_ok += signature_scalar(m) == oracle.triple;
  }
  o.pass = rational_ok == 1000 && cyc_ok == 200;
  o.detail = std::to_string(rational_ok) + "/1000 rational (" + std::to_string(skipped) + " below margin skipped), " +
             std::to_string(cyc_ok) + "/200 over Q(zeta12)";
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

Outcome a9() {
  Outcome o;
  const std::string tool = L2SIG_TOOL_PATH;
  std::vector<std::string> commands;
  for (auto& e : fs::directory_iterator(L2SIG_CORPUS_DIR)) {
    const auto path = e.path().string();
    if (e.path().extension() == ".ledger") {
      commands.push_back("ledger " + path);
      continue;
    }
    if (e.path().extension() != ".form") continue;
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto doc = parse_form(ss.str());
    if (std::holds_alternative<LaurentHermitianForm>(doc)) {
      commands.push_back("zapprox " + path + " --k-max 200 --tol 1e-9");
      continue;
    }
    const auto& f = std::get<HermitianGroupForm>(doc);
    commands.push_back("invariants " + path);
    commands.push_back("--jobs 4 invariants " + path);
    std::string into = "cyclic:3";
    if (f.group.rank() == 1) into = "cyclic:" + std::to_string(2 * f.group.order());
    if (f.group.rank() > 1) {
      into = "abelian:";
      for (std::size_t i = 0; i < f.group.rank(); ++i) into += (i ? "," : "") + std::to_string(2 * f.group.factors()[i]);
    }
    commands.push_back("induce " + path + " --into " + into);
  }
  commands.push_back("family --n 3 --count 10");
  std::sort(commands.begin(), commands.end());

  std::size_t stable = 0;
  std::string first_failure;
  for (auto& c : commands) {
    const std::string reference = capture(tool + " " + c + " 2>&1");
    bool same = reference.find("<exit") == std::string::npos;
    for (int run = 1; run < 5 && same; ++run) same = capture(tool + " " + c + " 2>&1") == reference;
    if (same) ++stable;
    else if (first_failure.empty()) first_failure = c;
  }
  // Parallel and serial invariants reports must coincide as well.
  for (auto& c : commands) {
    if (c.rfind("--jobs 4 ", 0) != 0) continue;
    if (capture(tool + " " + c) != capture(tool + " " + c.substr(9))) {
      if (first_failure.empty()) first_failure = c + " (jobs)";
      stable = 0;
    }
  }
  o.pass = stable == commands.size();
  o.detail = std::to_string(stable) + "/" + std::to_string(commands.size()) + " commands byte-identical over 5 runs";
  if (!first_failure.empty()) o.detail += "; first failure: " + first_failure;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double budget_seconds;  // 0 = no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"A1", 5, a1}, {"A2", 60, a2}, {"A3", 0, a3}, {"A4", 0, a4}, {"A5", 0, a5},
      {"A6", 30, a6}, {"A7", 0, a7}, {"A8", 0, a8}, {"A9", 0, a9},
  };
  int failures = 0;
  for (auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    failures += !o.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << " (" << timing << ") " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
