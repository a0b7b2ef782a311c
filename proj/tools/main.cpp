#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ccc/adjunction.hpp"
#include "ccc/lambda.hpp"
#include "ccc/laws.hpp"
#include "ccc/poly.hpp"
#include "ccc/rewrite.hpp"
#include "ccc/text.hpp"

namespace {

// Exit codes: 0 success or EQUAL verdict, 1 NOT-EQUAL verdict, 2 user error
// (bad usage, unreadable file, parse or type failure), 3 broken internal
// invariant.
constexpr int kExitEqual = 0;
constexpr int kExitNotEqual = 1;
constexpr int kExitUserError = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ccc::Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ccc::Signature load_signature(const std::string& path) {
  return ccc::parse_signature(read_file(path));
}

void print_term_with_type(const ccc::ArrowPtr& t, const ccc::Signature& sig) {
  std::cout << ccc::print_arrow(t) << "\n";
  std::cout << "type: " << ccc::print_type(ccc::type_of(t, sig)) << "\n";
}

int require_one_side(bool left, bool right) {
  if (left == right) throw ccc::Error("choose exactly one of --left / --right");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel for free cartesian closed categories over a signature"};
  app.require_subcommand(1);

  std::string sig_path, term1, term2, point, report_path;
  bool left = false, right = false, simplify = false;
  int depth = 4, cases = 200;
  std::uint64_t seed = 20260810;

  auto* cmd_check = app.add_subcommand("check-eq", "decide equality of two terms");
  cmd_check->add_option("sig", sig_path)->required();
  cmd_check->add_option("term1", term1)->required();
  cmd_check->add_option("term2", term2)->required();

  auto* cmd_norm = app.add_subcommand("normalize", "normal form of a term");
  cmd_norm->add_option("sig", sig_path)->required();
  cmd_norm->add_option("term", term1)->required();

  auto* cmd_abs = app.add_subcommand("abstract", "eliminate the indeterminate");
  cmd_abs->add_option("sig", sig_path)->required();
  cmd_abs->add_option("term", term1)->required();
  cmd_abs->add_flag("--left", left, "into the product: result D*A |- B");
  cmd_abs->add_flag("--right", right, "into the exponential: result A |- D->B");
  cmd_abs->add_flag("--simplify", simplify, "also print a normal-form-based pretty form");

  auto* cmd_app = app.add_subcommand("apply", "apply to the indeterminate");
  cmd_app->add_option("sig", sig_path)->required();
  cmd_app->add_option("term", term1)->required();
  cmd_app->add_flag("--left", left, "from the product: input D*A |- B");
  cmd_app->add_flag("--right", right, "from the exponential: input A |- D->B");
  cmd_app->add_flag("--simplify", simplify, "also print a normal-form-based pretty form");

  auto* cmd_inst = app.add_subcommand("instantiate", "substitute a point for the indeterminate");
  cmd_inst->add_option("sig", sig_path)->required();
  cmd_inst->add_option("term", term1)->required();
  cmd_inst->add_option("point", point)->required();

  auto* cmd_type = app.add_subcommand("typeof", "type of a term");
  cmd_type->add_option("sig", sig_path)->required();
  cmd_type->add_option("term", term1)->required();

  auto* cmd_self = app.add_subcommand("selftest", "run the adjunction law suite");
  cmd_self->add_option("sig", sig_path)->required();
  cmd_self->add_option("--depth", depth, "term depth bound");
  cmd_self->add_option("--cases", cases, "cases per law");
  cmd_self->add_option("--seed", seed, "generator seed");
  cmd_self->add_option("--report", report_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUserError;
  }

  try {
    if (*cmd_check) {
      ccc::Signature sig = load_signature(sig_path);
      ccc::ArrowPtr a = ccc::parse_arrow(term1, sig);
      ccc::ArrowPtr b = ccc::parse_arrow(term2, sig);
      bool equal = ccc::arrows_equal(a, b, sig);
      std::cout << (equal ? "EQUAL" : "NOT-EQUAL") << "\n";
      std::cout << "nf1: " << ccc::print_lambda(ccc::nf(ccc::to_lambda(a, sig))) << "\n";
      std::cout << "nf2: " << ccc::print_lambda(ccc::nf(ccc::to_lambda(b, sig))) << "\n";
      return equal ? kExitEqual : kExitNotEqual;
    }
    if (*cmd_norm) {
      ccc::Signature sig = load_signature(sig_path);
      ccc::ArrowPtr t = ccc::parse_arrow(term1, sig);
      std::cout << "normal-form: " << ccc::print_lambda(ccc::nf(ccc::to_lambda(t, sig))) << "\n";
      std::cout << "arrow: " << ccc::print_arrow(ccc::simplify_arrow(t, sig)) << "\n";
      std::cout << "type: " << ccc::print_type(ccc::type_of(t, sig)) << "\n";
      return kExitEqual;
    }
    if (*cmd_abs) {
      require_one_side(left, right);
      ccc::Signature sig = load_signature(sig_path);
      ccc::ArrowPtr t = ccc::parse_arrow(term1, sig);
      ccc::ArrowPtr out = left ? ccc::phi_prime(t, sig) : ccc::gamma_double(t, sig);
      print_term_with_type(out, sig);
      if (simplify) std::cout << "simplified: " << ccc::print_arrow(ccc::simplify_arrow(out, sig)) << "\n";
      return kExitEqual;
    }
    if (*cmd_app) {
      require_one_side(left, right);
      ccc::Signature sig = load_signature(sig_path);
      ccc::ArrowPtr t = ccc::parse_arrow(term1, sig);
      ccc::ArrowPtr out = left ? ccc::gamma_prime(t, sig) : ccc::phi_double(t, sig);
      print_term_with_type(out, sig);
      if (simplify) std::cout << "simplified: " << ccc::print_arrow(ccc::simplify_arrow(out, sig)) << "\n";
      return kExitEqual;
    }
    if (*cmd_inst) {
      ccc::Signature sig = load_signature(sig_path);
      ccc::ArrowPtr t = ccc::parse_arrow(term1, sig);
      ccc::ArrowPtr a = ccc::parse_arrow(point, sig);
      print_term_with_type(ccc::instantiate(t, a, sig), sig);
      return kExitEqual;
    }
    if (*cmd_type) {
      ccc::Signature sig = load_signature(sig_path);
      ccc::ArrowPtr t = ccc::parse_arrow(term1, sig);
      std::cout << ccc::print_type(ccc::type_of(t, sig)) << "\n";
      return kExitEqual;
    }
    if (*cmd_self) {
      ccc::Signature sig = load_signature(sig_path);
      ccc::LawReport report = ccc::law_suite(sig, depth, cases, seed);
      std::string text = ccc::report_to_text(report);
      std::cout << text;
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw ccc::Error("cannot write '" + report_path + "'");
        out << text;
      }
      // A failing law means the kernel broke one of its own theorems.
      return report.all_passed() ? kExitEqual : kExitInternal;
    }
    throw ccc::InternalError("no subcommand dispatched");
  } catch (const ccc::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ccc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
