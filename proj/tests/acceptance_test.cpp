// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.

#include "sgl/json_io.hpp"
#include "sgl/version.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sgl;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string path =
      "/tmp/sgl_acceptance_" + std::to_string(counter++) + ".out";
  std::string cmd = std::string(SEMIGROUP_LAB_CLI_PATH) + " " + args + " > " + path +
                    " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WEXITSTATUS(status);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  std::remove(path.c_str());
  return res;
}

struct Harness {
  int failures = 0;

  void run(int number, const std::string& label, double limit_seconds,
           const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && (limit_seconds <= 0 || secs < limit_seconds);
    if (!error.empty()) {
      ok = false;
    } else if (limit_seconds > 0 && secs >= limit_seconds) {
      error = "runtime limit exceeded";
    }
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), secs, error.empty() ? "" : " -- ", error.c_str());
    if (!ok) ++failures;
  }
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

RingElem el(long x, long y = 0) { return RingElem{BigInt(x), BigInt(y)}; }

std::uint64_t rng_state;
std::uint64_t rng_next() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}

}  // namespace

int main() {
  Harness h;

  h.run(1, "quasi-lattice family shape for the free monoid", 5.0, [] {
    auto r = run_cli("ideals --model free:2 --depth 4");
    require(r.exit_code == 0, "ideals exit code");
    auto j = nlohmann::json::parse(r.out);
    int empties = 0;
    for (const auto& e : j["result"]["ideals"]) {
      if (e["form"] == "empty") {
        ++empties;
        continue;
      }
      require(e["form"] == "principal", "non-principal ideal in free:2 family");
    }
    require(empties == 1, "empty set missing from the family");
    require(run_cli("check independence --model free:2 --depth 4").exit_code == 0,
            "independence exit code");
  });

  h.run(2, "independence failure witness for <2,3>", 5.0, [] {
    auto r = run_cli("check independence --model numerical:2,3 --depth 4");
    require(r.exit_code == 1, "expected exit 1");
    auto j = nlohmann::json::parse(r.out);
    const auto& w = j["result"]["witness"];
    require(w["form"] == "tail" && w["sporadic"].empty() && w["threshold"] == 2,
            "witness is not {2,3,4,...}");
    const auto& covers = j["result"]["covers"];
    require(covers.size() == 2, "expected two covering ideals");
    require(covers[0]["form"] == "tail" &&
                covers[0]["sporadic"] == nlohmann::json::array({2}) &&
                covers[0]["threshold"] == 4,
            "first cover is not 2+P");
    require(covers[1]["form"] == "tail" &&
                covers[1]["sporadic"] == nlohmann::json::array({3}) &&
                covers[1]["threshold"] == 5,
            "second cover is not 3+P");
    // brute-force subset oracle on {0..200}
    auto m = SemigroupModel::numerical({2, 3});
    auto member = [&](std::int64_t base, std::int64_t n) {
      return n >= base && m->numerical_member(n - base);
    };
    for (std::int64_t n = 0; n <= 200; ++n) {
      bool in_x = n >= 2;
      bool in_union = member(2, n) || member(3, n);
      require(in_x == in_union, "union mismatch at " + std::to_string(n));
    }
    require(!member(2, 3), "2+P is not proper");
    require(!member(3, 2), "3+P is not proper");
  });

  h.run(3, "ax+b over Z: coset family, quasi-lattice, reversibility", 10.0, [] {
    auto m = SemigroupModel::axb(RingDescriptor::integers());
    auto fam = compute_family(m, 2, false);
    for (const auto& e : fam.entries) {
      if (e.ideal.is_empty()) continue;
      require(std::holds_alternative<CosetIdeal>(e.ideal.v),
              "family member is not a coset ideal");
    }
    require(run_cli("check quasi-lattice --model axb:Z").exit_code == 0,
            "quasi-lattice exit code");
    auto r = run_cli("check reversible --model axb:Z --side left");
    require(r.exit_code == 1, "left reversibility exit code");
    auto j = nlohmann::json::parse(r.out);
    require(j["result"]["witness"][0] == "(0,2)" && j["result"]["witness"][1] == "(1,2)",
            "left reversibility witness");
    require(run_cli("check reversible --model axb:Z --side right --radius 3")
                    .exit_code == 0,
            "right reversibility exit code");
  });

  h.run(4, "Dedekind arithmetic in Z[sqrt(-5)]", 10.0, [] {
    RingDescriptor ring = RingDescriptor::quadratic(-5);
    RingIdeal p2 = RingIdeal::from_generators(ring, {el(2), el(1, 1)});
    auto f = factor(RingIdeal::principal(ring, el(2)));
    require(f.size() == 1 && f[0].prime == p2 && f[0].exponent == 2,
            "2R does not factor as P2^2");
    require(!is_principal(p2).principal && is_principal(p2).exhaustive,
            "P2 principality");
    auto fr = fractional_representation(p2);
    RingIdeal aR = RingIdeal::principal(ring, fr.a);
    for (int x = -10; x <= 10; ++x)
      for (int y = -4; y <= 4; ++y) {
        RingElem z = el(x, y);
        if (big_abs(re_norm(ring, z)) > 100) continue;
        require(p2.contains(z) == aR.contains(re_mul(ring, fr.c, z)),
                "fractional representation membership mismatch");
      }
    auto w = strong_approx_witness(RingIdeal::of_integer(2),
                                   {RingIdeal::of_integer(4), RingIdeal::of_integer(6)});
    require(w.has_value() && w.value() == el(2), "strong approximation witness");
  });

  h.run(5, "Folner certificates and the consistency audit", 30.0, [] {
    auto n = SemigroupModel::free_abelian(1);
    auto out = folner_search(n, {n->exps({1})}, Rational(1, 10), FolnerBudget{});
    require(out.found, "no certificate for N");
    auto size = static_cast<std::int64_t>(out.certificate.set.size());
    require(out.certificate.ratios[0].second == Rational(2, size),
            "ratio is not 2/|F|");
    DiscreteMean mu = mean_from_folner(out.certificate);
    require(mean_deviation(n, mu, n->exps({1})) == Rational(2, size),
            "mean deviation is not 2/|F|");

    auto n2 = SemigroupModel::free_abelian(2);
    auto out2 = folner_search(n2, n2->generators(), Rational(1, 10), FolnerBudget{});
    require(out2.found && out2.certificate.set.size() == 441, "N^2 box");
    for (const auto& [p, r] : out2.certificate.ratios)
      require(r == Rational(2, 21), "N^2 ratio is not 2/21");

    auto free2 = SemigroupModel::free_monoid(2);
    FolnerBudget budget;
    budget.max_size = 1100;
    auto out3 = folner_search(free2, free2->generators(), Rational(1, 2), budget);
    require(!out3.found, "free monoid certificate should not exist");
    require(out3.best_ratio >= 1, "free monoid best ratio below 1");

    for (const char* spec :
         {"abelian:1", "abelian:2", "free:2", "numerical:2,3", "axb:Z"})
      require(run_cli(std::string("audit --model ") + spec).exit_code == 0,
              std::string("audit not consistent for ") + spec);
  });

  h.run(6, "operator identities on truncations", 30.0, [] {
    struct Setup {
      const char* spec;
      int radius;
    };
    for (const Setup& s : {Setup{"abelian:1", 12}, Setup{"free:2", 5}}) {
      auto m = SemigroupModel::parse(s.spec);
      auto rep = build_truncation(m, s.radius);
      auto fam = compute_family(m, 2, false);
      SampleConfig cfg;
      cfg.random_words = 50;
      cfg.seed = 7;
      auto report = verify_relations(rep, fam, cfg);
      require(report.all_ok(), std::string("relation failures on ") + s.spec);
      // every alternating word of length <= 3 over ball(2) pairs
      auto letters = m->ball(2);
      std::vector<OpWord> stack = {OpWord{}};
      for (int len = 1; len <= 3; ++len) {
        std::vector<OpWord> next;
        for (const OpWord& w : stack)
          for (const Element& p : letters)
            for (const Element& q : letters) {
              OpWord w2 = w;
              w2.push_back({p, q});
              next.push_back(w2);
            }
        for (const OpWord& w : next) {
          auto check = verify_word_product_relation(rep, w);
          require(check.ok, std::string("word relation failed on ") + s.spec +
                                ": " + check.detail);
          auto diag_check = verify_diagonal_extraction(rep, w);
          require(diag_check.ok, std::string("diagonal extraction failed on ") + s.spec);
        }
        stack = std::move(next);
      }
    }
  });

  h.run(7, "vector-state identity ties the two models", 30.0, [] {
    rng_state = 20240517;
    for (const char* spec :
         {"abelian:1", "abelian:2", "free:2", "numerical:2,3", "axb:Z"}) {
      auto m = SemigroupModel::parse(spec);
      auto rep = build_truncation(m, spec == std::string("abelian:1") ? 12 : 4);
      std::vector<int> interior_cols;
      for (std::size_t i = 0; i < rep.window.size(); ++i)
        if (rep.in_interior(1, static_cast<int>(i)))
          interior_cols.push_back(static_cast<int>(i));
      require(interior_cols.size() >= 2, "interior too small");
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> f_cols;
        for (int c : interior_cols)
          if (rng_next() % 2) f_cols.push_back(c);
        if (f_cols.empty()) f_cols.push_back(interior_cols[0]);
        const Element& p = rep.test_elements[rng_next() % rep.test_elements.size()];
        std::vector<Element> f;
        for (int c : f_cols) f.push_back(rep.window[static_cast<std::size_t>(c)]);
        require(vector_state_norm_sq(rep, p, f_cols) == vector_state_defect(m, f, p),
                std::string("vector state mismatch on ") + spec);
      }
    }
  });

  h.run(8, "determinism of seeded runs", 30.0, [] {
    for (const std::string& args :
         {std::string("ideals --model axb:Z --depth 2 --seed 7"),
          std::string("opmodel --model abelian:1 --radius 12 --words 50 --seed 7"),
          std::string("folner --model abelian:2 --eps 1/10")}) {
      auto a = run_cli(args);
      auto b = run_cli(args);
      require(a.exit_code == b.exit_code, "exit codes differ: " + args);
      require(!a.out.empty() && a.out == b.out, "output differs: " + args);
    }
  });

  if (h.failures == 0) std::printf("all acceptance criteria passed\n");
  return h.failures;
}
