#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>

#include "mring/error.hpp"
#include "mring/invariants.hpp"
#include "mring/io.hpp"
#include "mring/nested.hpp"
#include "mring/ring.hpp"
#include "mring/verify.hpp"

namespace {

using namespace mring;

std::string read_first_line(const std::string& path, std::istream& fallback) {
  std::string line;
  if (path.empty() || path == "-") {
    if (!std::getline(fallback, line)) fail(errc::parse_error, "no input line");
    return line;
  }
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  if (!std::getline(in, line)) fail(errc::parse_error, "no input line in " + path);
  return line;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) fail(errc::parse_error, "cannot open " + path + " for writing");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection ring of loopfree matroids on a labeled ground set"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input_path, output_path;
  app.add_option("-i,--input", input_path, "input file (default stdin)");
  app.add_option("-o,--output", output_path, "output file (default stdout)");
  std::uint64_t seed = 42;
  long long samples = 200;
  app.add_option("--seed", seed, "seed for randomized runs");
  app.add_option("--samples", samples, "sample count for randomized runs");

  auto* cmd_decompose = app.add_subcommand("decompose", "nested-basis decomposition of a matroid");
  std::string decompose_file;
  cmd_decompose->add_option("file", decompose_file, "matroid/v1 line");

  auto* cmd_product = app.add_subcommand("product", "ring product of two matroids");
  std::string product_a, product_b;
  cmd_product->add_option("fileA", product_a)->required();
  cmd_product->add_option("fileB", product_b)->required();

  auto* cmd_pairing = app.add_subcommand("pairing", "pairing matrix between complementary grades");
  int pairing_n = 0, pairing_r = 0;
  bool det_only = false;
  cmd_pairing->add_option("--n", pairing_n)->required();
  cmd_pairing->add_option("--r", pairing_r)->required();
  cmd_pairing->add_flag("--det-only", det_only, "print only the determinant");

  auto* cmd_tutte = app.add_subcommand("tutte", "Tutte polynomial of a matroid");
  std::string tutte_file;
  cmd_tutte->add_option("file", tutte_file);

  auto* cmd_ginv = app.add_subcommand("ginv", "catenary data of a matroid");
  std::string ginv_file;
  cmd_ginv->add_option("file", ginv_file);

  auto* cmd_count = app.add_subcommand("count-nested", "number of loopfree nested matroids");
  int count_n = 0, count_r = 0;
  cmd_count->add_option("--n", count_n)->required();
  cmd_count->add_option("--r", count_r)->required();

  auto* cmd_enum = app.add_subcommand("enumerate-nested", "stream all loopfree nested matroids");
  int enum_n = 0, enum_r = 0;
  cmd_enum->add_option("--n", enum_n)->required();
  cmd_enum->add_option("--r", enum_r)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run the property suite");
  int verify_n = 4;
  bool exhaustive = false;
  cmd_verify->add_option("--n", verify_n)->required();
  cmd_verify->add_flag("--exhaustive", exhaustive, "all matroids up to n (n <= 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ofstream file_out;
  try {
    std::ostream& out = open_output(output_path, file_out);
    if (cmd_decompose->parsed()) {
      const Matroid m = parse_matroid(read_first_line(
          decompose_file.empty() ? input_path : decompose_file, std::cin));
      for (const auto& [coeff, nm] : decompose_to_nested(m))
        out << coeff << "\t" << serialize_matroid(nm) << "\n";
    } else if (cmd_product->parsed()) {
      const Matroid a = parse_matroid(read_first_line(product_a, std::cin));
      const Matroid b = parse_matroid(read_first_line(product_b, std::cin));
      const auto p = product(a, b);
      if (p)
        out << serialize_matroid(*p) << "\n";
      else
        out << "0\n";
    } else if (cmd_pairing->parsed()) {
      const auto mat = pairing_matrix(pairing_r, pairing_n);
      if (!det_only) {
        for (const auto& row : mat) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << "\n";
        }
      }
      out << "det=" << pairing_determinant(mat).get_str() << "\n";
    } else if (cmd_tutte->parsed()) {
      const Matroid m =
          parse_matroid(read_first_line(tutte_file.empty() ? input_path : tutte_file, std::cin));
      const TuttePolynomial t = tutte(m);
      std::vector<std::pair<std::pair<int, int>, long long>> monomials(t.coeffs.begin(), t.coeffs.end());
      std::sort(monomials.begin(), monomials.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second > b.first.second;
      });
      for (const auto& [deg, c] : monomials)
        out << c << "*x^" << deg.first << "*y^" << deg.second << "\n";
    } else if (cmd_ginv->parsed()) {
      const Matroid m =
          parse_matroid(read_first_line(ginv_file.empty() ? input_path : ginv_file, std::cin));
      for (const auto& [comp, c] : g_invariant(m).counts) {
        out << c << " gamma(";
        for (std::size_t i = 0; i < comp.parts.size(); ++i) out << (i ? "," : "") << comp.parts[i];
        out << ")\n";
      }
    } else if (cmd_count->parsed()) {
      out << count_nested(count_r, count_n).get_str() << "\n";
    } else if (cmd_enum->parsed()) {
      for (const auto& m : enumerate_nested(enum_r, enum_n)) out << serialize_matroid(m) << "\n";
    } else if (cmd_verify->parsed()) {
      VerifyOptions vo;
      vo.n = verify_n;
      vo.exhaustive = exhaustive;
      vo.samples = samples;
      vo.seed = seed;
      const VerifyReport report = run_verify(vo);
      out << format_report(report);
      return report.all_ok() ? 0 : 1;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
