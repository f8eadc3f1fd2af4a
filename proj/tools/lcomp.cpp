#include <iostream>

#include "CLI11.hpp"
#include "lcomp/report.hpp"

using namespace lcomp;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNotFound = 2, kSizeLimit = 3, kConsistency = 4 };

int golden() {
  int failed = 0;
  for (const auto& row : golden_suite()) {
    if (row.pass()) {
      std::cout << "PASS " << row.name << ": " << row.actual << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << row.name << "\n  - expected: " << row.expected << "\n  + actual:   " << row.actual << "\n";
    }
  }
  std::cout << (failed ? std::to_string(failed) + " golden rows failed" : "all golden rows pass") << "\n";
  return failed ? kConsistency : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local components of modular forms at p"};
  JobSpec job;
  std::vector<std::string> orbit, constrain;
  std::string format = "text";
  bool run_golden = false;
  app.add_option("--level", job.level, "Level N p^r");
  app.add_option("--p", job.p, "The prime p");
  app.add_option("--weight", job.weight, "Weight k")->capture_default_str();
  app.add_option("--character", job.character, "\"trivial\", \"all\", or u=k/n,... (prefix m: to extend from modulus m)")
      ->capture_default_str();
  app.add_option("--orbit", orbit, "Orbit index, \"all\", or an eigenvalue constraint such as a2=-1");
  app.add_option("--constrain", constrain, "Eigenvalue constraint a<l>=<rational> or a<l>~<minimal polynomial>");
  app.add_flag("--char-table", job.char_table, "Enumerate conjugacy classes and traces");
  app.add_flag("--admissible-pair", job.admissible_pair, "Identify the admissible pair (p odd)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--class-limit", job.class_limit, "Largest class enumeration allowed")->capture_default_str();
  app.add_flag("--timing", job.timing, "Add wall-clock times (output is then not reproducible)");
  app.add_flag("--golden", run_golden, "Run the golden example suite");
  CLI11_PARSE(app, argc, argv);

  try {
    if (run_golden) return golden();
    if (job.level == 0 || job.p == 0) throw UsageError("--level and --p are required");
    for (const auto& o : orbit) {
      if (o == "all") continue;
      if (!o.empty() && std::all_of(o.begin(), o.end(), ::isdigit)) job.orbit = std::stoul(o);
      else job.constraints.push_back(o);
    }
    for (const auto& c : constrain) job.constraints.push_back(c);

    Json out = run_job(job);
    if (format == "json") std::cout << out.dump(2) << "\n";
    else std::cout << render_text(out);
    const std::string status = out["status"];
    if (status == "consistency-failure") return kConsistency;
    if (status == "size-limit") return kSizeLimit;
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kNotFound;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  }
}
