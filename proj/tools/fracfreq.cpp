// fracfreq: Bode data for fractional-order transfer functions.
//
//   fracfreq --tf "10000/s^0.5" --wmin 1 --wmax 100 --ppd 10 --format json

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fracfreq/error.hpp"
#include "fracfreq/response.hpp"
#include "fracfreq/tf_model.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency response of fractional-order transfer functions"};

  std::string expr;
  fracfreq::FrequencyGrid grid;
  fracfreq::OutputFormat format = fracfreq::OutputFormat::csv;
  std::string out_path;

  app.add_option("--tf", expr, "transfer function, e.g. \"10000/s^0.5\"")
      ->required();
  app.add_option("--wmin", grid.omega_min, "lowest angular frequency [rad/s]")
      ->capture_default_str();
  app.add_option("--wmax", grid.omega_max, "highest angular frequency [rad/s]")
      ->capture_default_str();
  app.add_option("--ppd", grid.points_per_decade, "points per decade")
      ->capture_default_str();
  const std::map<std::string, fracfreq::OutputFormat> formats{
      {"csv", fracfreq::OutputFormat::csv},
      {"json", fracfreq::OutputFormat::json}};
  app.add_option("--format", format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", out_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  fracfreq::FracTF tf = [&] {
    try {
      return fracfreq::parse_tf(expr);
    } catch (const fracfreq::ParseError& e) {
      std::cerr << "fracfreq: parse error: " << e.what() << "\n"
                << "  " << expr << "\n  " << std::string(e.offset(), ' ')
                << "^\n";
      std::exit(kExitParse);
    }
  }();

  std::string text;
  try {
    grid.validate();
    text = fracfreq::emit(fracfreq::sweep(tf, grid), format);
  } catch (const fracfreq::EvaluationError& e) {
    std::cerr << "fracfreq: evaluation error: " << e.what() << "\n";
    return kExitEval;
  } catch (const fracfreq::DomainError& e) {
    std::cerr << "fracfreq: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    std::cout << text;
    return std::cout.good() ? 0 : kExitUsage;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "fracfreq: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return 0;
}
