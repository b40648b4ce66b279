// harmonia: command-line surface over the library.  Every command reads and
// writes single JSON documents (CSV for tables), exits 0 on success, 2 on a
// validation error with a machine-readable {"error", "detail"} object, 64 on
// an unknown subcommand, and 65 on an unreadable or unparseable input file.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "harmonia/acceptance.hpp"
#include "harmonia/banach.hpp"
#include "harmonia/circle.hpp"
#include "harmonia/group.hpp"
#include "harmonia/json_io.hpp"
#include "harmonia/padic.hpp"
#include "harmonia/solenoid.hpp"

using harmonia::Cx;
using harmonia::Int;
using harmonia::Json;
using harmonia::Rational;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitUnknownCommand = 64;
constexpr int kExitBadInput = 65;

struct BadInputFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail(const std::string& code, const std::string& detail, int exit_code) {
  Json err;
  err["error"] = code;
  err["detail"] = detail;
  std::cout << err.dump() << "\n";
  return exit_code;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInputFile("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw BadInputFile("cannot parse '" + path + "': " + e.what());
  }
}

void emit(const Json& doc, const std::string& out_path) {
  std::string text = doc.dump();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text << "\n";
  }
  std::cout << text << "\n";
}

std::vector<long long> parse_moduli(const std::string& csv) {
  std::vector<long long> moduli;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) moduli.push_back(std::stoll(item));
  if (moduli.empty()) throw std::invalid_argument("--moduli must list at least one factor");
  return moduli;
}

// Circle point from a fraction of a turn, quantized to nanoturns so that the
// angle reduction stays exact.
Cx circle_from_turns(double theta) {
  return harmonia::expi_turns(Rational(Int(std::llround(theta * 1e9)), Int(1000000000)));
}

}  // namespace

int main(int argc, char** argv) {
  static const std::set<std::string> known = {"dft",      "conv",    "abel",
                                              "poisson",  "padic",   "solenoid",
                                              "spectrum", "check",   "-h",
                                              "--help",   "help"};
  if (argc < 2) return fail("usage", "expected a subcommand", kExitValidation);
  if (!known.count(argv[1]))
    return fail("unknown-subcommand", std::string("no such command: ") + argv[1],
                kExitUnknownCommand);

  CLI::App app{"desk-scale harmonic analysis on finite groups, the circle, "
               "p-adic integers, and solenoids"};
  app.require_subcommand(1);

  std::string input, input2, out_path, moduli_csv, x_str, a_str, y_str;
  double r = 0.0, theta = 0.0, theta_w = 0.0, tol = 1e-9;
  long long p = 3, u_val = 0, samples = 0;
  int levels = 20, level = 0, kmax = 64, grid = 64;
  std::uint64_t seed = 0;
  std::string numerator_str = "0";
  bool inverse = false, fast = false, measure = false, kernel_mode = false;

  auto* dft_cmd = app.add_subcommand("dft", "transform a group function");
  dft_cmd->add_option("--input", input)->required();
  dft_cmd->add_option("--moduli", moduli_csv);
  dft_cmd->add_flag("--inverse", inverse);
  dft_cmd->add_flag("--fast", fast);
  dft_cmd->add_option("--tol", tol);
  dft_cmd->add_option("--out", out_path);

  auto* conv_cmd = app.add_subcommand("conv", "convolve two functions or measures");
  conv_cmd->add_option("--input", input)->required();
  conv_cmd->add_option("--input2", input2)->required();
  conv_cmd->add_flag("--measure", measure);
  conv_cmd->add_option("--out", out_path);

  auto* abel_cmd = app.add_subcommand("abel", "Abel mean of a coefficient sequence");
  abel_cmd->add_option("--input", input)->required();
  abel_cmd->add_option("--r", r)->required();
  abel_cmd->add_option("--theta,--z", theta);
  abel_cmd->add_option("--out", out_path);

  auto* poisson_cmd = app.add_subcommand("poisson", "Poisson kernel and harmonic extension");
  poisson_cmd->add_option("--input", input);
  poisson_cmd->add_option("--r", r)->required();
  poisson_cmd->add_option("--theta,--z", theta);
  poisson_cmd->add_option("--theta-w", theta_w);
  poisson_cmd->add_flag("--kernel", kernel_mode);
  poisson_cmd->add_option("--samples", samples);
  poisson_cmd->add_option("--grid", grid);
  poisson_cmd->add_option("--csv-out", out_path);

  auto* padic_cmd = app.add_subcommand("padic", "p-adic arithmetic");
  padic_cmd->require_subcommand(1);
  auto* padic_abs_cmd = padic_cmd->add_subcommand("abs", "p-adic absolute value");
  padic_abs_cmd->add_option("--p", p)->required();
  padic_abs_cmd->add_option("--x", x_str)->required();
  padic_abs_cmd->add_option("--L", levels);
  auto* padic_val_cmd = padic_cmd->add_subcommand("val", "p-adic valuation");
  padic_val_cmd->add_option("--p", p)->required();
  padic_val_cmd->add_option("--x", x_str)->required();
  padic_val_cmd->add_option("--L", levels);
  auto* padic_inv_cmd = padic_cmd->add_subcommand("inv", "invert a unit mod p^L");
  padic_inv_cmd->add_option("--p", p)->required();
  padic_inv_cmd->add_option("--L", levels)->required();
  padic_inv_cmd->add_option("--x", x_str)->required();
  auto* padic_pair_cmd = padic_cmd->add_subcommand("pair", "character pairing of y with x");
  padic_pair_cmd->add_option("--p", p)->required();
  padic_pair_cmd->add_option("--y", y_str)->required();
  padic_pair_cmd->add_option("--x", x_str)->required();
  padic_pair_cmd->add_option("--L", levels);
  auto* padic_haar_cmd = padic_cmd->add_subcommand("haar", "Haar average of a level table");
  padic_haar_cmd->add_option("--p", p)->required();
  padic_haar_cmd->add_option("--input", input)->required();
  padic_haar_cmd->add_option("--J", level)->required();
  auto* padic_fourier_cmd = padic_cmd->add_subcommand("fourier", "transform of a level table");
  padic_fourier_cmd->add_option("--p", p)->required();
  padic_fourier_cmd->add_option("--input", input)->required();
  padic_fourier_cmd->add_flag("--inverse", inverse);
  padic_fourier_cmd->add_option("--out", out_path);

  auto* sol_cmd = app.add_subcommand("solenoid", "coherent angle towers");
  sol_cmd->require_subcommand(1);
  auto* sol_real_cmd = sol_cmd->add_subcommand("from-real", "image of a real number");
  sol_real_cmd->add_option("--radices", moduli_csv)->required();
  sol_real_cmd->add_option("--a", a_str)->required();
  sol_real_cmd->add_option("--out", out_path);
  auto* sol_embed_cmd = sol_cmd->add_subcommand("embed", "embed an r-adic integer");
  sol_embed_cmd->add_option("--radices", moduli_csv)->required();
  sol_embed_cmd->add_option("--u", u_val)->required();
  sol_embed_cmd->add_option("--out", out_path);
  auto* sol_add_cmd = sol_cmd->add_subcommand("add", "add two points");
  sol_add_cmd->add_option("--input", input)->required();
  sol_add_cmd->add_option("--input2", input2)->required();
  sol_add_cmd->add_option("--out", out_path);
  auto* sol_char_cmd = sol_cmd->add_subcommand("char", "evaluate a character a/R_k");
  sol_char_cmd->add_option("--input", input)->required();
  sol_char_cmd->add_option("--level", level)->required();
  sol_char_cmd->add_option("--num", numerator_str)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "convolution-operator eigensystem");
  spectrum_cmd->add_option("--input", input)->required();
  spectrum_cmd->add_option("--moduli", moduli_csv);
  spectrum_cmd->add_option("--kmax", kmax);
  spectrum_cmd->add_option("--tol", tol);
  spectrum_cmd->add_option("--out", out_path);

  auto* check_cmd = app.add_subcommand("check", "run the verification suite");
  check_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kExitValidation);
  }

  try {
    if (dft_cmd->parsed()) {
      harmonia::GroupFun f = harmonia::group_fun_from_json(load_json(input));
      if (!moduli_csv.empty() && parse_moduli(moduli_csv) != f.group.moduli())
        throw std::invalid_argument("--moduli disagrees with the input file");
      if (inverse) {
        harmonia::GroupFun g = harmonia::idft(f.group, f.values, f.haar);
        emit(harmonia::to_json(g), out_path);
      } else {
        auto fhat = harmonia::dft(f);
        if (fast) {
          auto quick = harmonia::dft_fast(f);
          double gap = 0.0;
          for (std::size_t i = 0; i < fhat.size(); ++i)
            gap = std::max(gap, harmonia::modulus(fhat[i] - quick[i]));
          if (gap > tol)
            throw std::domain_error("fast path disagrees with the direct sum by " +
                                    std::to_string(gap));
          fhat = std::move(quick);
        }
        emit(harmonia::to_json(harmonia::GroupFun{f.group, fhat, f.haar}), out_path);
      }
    } else if (conv_cmd->parsed()) {
      if (measure) {
        auto mu = harmonia::group_measure_from_json(load_json(input));
        auto nu = harmonia::group_measure_from_json(load_json(input2));
        emit(harmonia::to_json(harmonia::convolve(mu, nu)), out_path);
      } else {
        auto f = harmonia::group_fun_from_json(load_json(input));
        auto g = harmonia::group_fun_from_json(load_json(input2));
        emit(harmonia::to_json(harmonia::convolve(f, g)), out_path);
      }
    } else if (abel_cmd->parsed()) {
      harmonia::TrigPoly poly = harmonia::trig_poly_from_json(load_json(input));
      Cx value = harmonia::abel_sum(poly, r, circle_from_turns(theta));
      Json doc;
      doc["value"] = harmonia::to_json(value);
      emit(doc, out_path);
    } else if (poisson_cmd->parsed()) {
      if (kernel_mode) {
        double P = harmonia::poisson_kernel(r, circle_from_turns(theta),
                                            circle_from_turns(theta_w));
        Json doc;
        doc["kernel"] = P;
        emit(doc, "");
      } else if (!input.empty()) {
        auto f = harmonia::sampled_circle_fun_from_json(load_json(input));
        if (samples > 0 && f.size() != static_cast<std::size_t>(samples))
          throw std::invalid_argument("--samples disagrees with the input file");
        Cx value = harmonia::poisson_extension(f, r, circle_from_turns(theta));
        Json doc;
        doc["value"] = harmonia::to_json(value);
        emit(doc, "");
      } else if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open '" + out_path + "'");
        out << harmonia::poisson_kernel_csv({r}, static_cast<std::size_t>(grid));
        Json doc;
        doc["written"] = out_path;
        emit(doc, "");
      } else {
        throw std::invalid_argument("poisson needs --kernel, --input, or --csv-out");
      }
    } else if (padic_cmd->parsed()) {
      if (padic_abs_cmd->parsed() || padic_val_cmd->parsed()) {
        auto q = harmonia::rational_from_string(x_str);
        auto x = harmonia::qp_normalize(p, q, levels);
        Json doc;
        if (padic_abs_cmd->parsed())
          doc["abs"] = harmonia::rational_to_string(harmonia::padic_abs(x));
        else if (x.zero)
          doc["zero"] = true;
        else
          doc["v"] = x.v;
        emit(doc, "");
      } else if (padic_inv_cmd->parsed()) {
        auto tower = harmonia::RadixTower::constant(p, levels);
        auto x = harmonia::radic_from_int(tower, Int(x_str));
        Json doc;
        doc["inverse"] = harmonia::invert_unit(x).residue.str();
        emit(doc, "");
      } else if (padic_pair_cmd->parsed()) {
        auto tower = harmonia::RadixTower::constant(p, levels);
        auto y = harmonia::qp_normalize(p, harmonia::rational_from_string(y_str), levels);
        auto x = harmonia::radic_from_int(tower, Int(x_str));
        auto frac = harmonia::pairing_fraction(y, x);
        Json doc;
        doc["fraction"] = harmonia::rational_to_string(frac.value());
        doc["value"] = harmonia::to_json(harmonia::char_pairing(y, x));
        emit(doc, "");
      } else if (padic_haar_cmd->parsed()) {
        Json j = load_json(input);
        std::vector<Cx> table;
        for (const auto& v : j.at("values")) table.push_back(harmonia::cx_from_json(v));
        Json doc;
        doc["integral"] = harmonia::to_json(harmonia::haar_integral(table, p, level));
        emit(doc, "");
      } else if (padic_fourier_cmd->parsed()) {
        Json j = load_json(input);
        std::vector<Cx> table;
        for (const auto& v : j.at("values")) table.push_back(harmonia::cx_from_json(v));
        auto result = inverse ? harmonia::zp_fourier_inverse(table, p)
                              : harmonia::zp_fourier(table, p);
        Json doc;
        Json arr = Json::array();
        for (const auto& v : result) arr.push_back(harmonia::to_json(v));
        doc["values"] = arr;
        emit(doc, out_path);
      }
    } else if (sol_cmd->parsed()) {
      if (sol_real_cmd->parsed()) {
        auto tower = harmonia::RadixTower::of(parse_moduli(moduli_csv));
        auto pt = harmonia::sol_from_real(tower, harmonia::rational_from_string(a_str));
        emit(harmonia::to_json(pt), out_path);
      } else if (sol_embed_cmd->parsed()) {
        auto tower = harmonia::RadixTower::of(parse_moduli(moduli_csv));
        auto pt = harmonia::zr_embed(harmonia::radic_from_int(tower, Int(u_val)));
        emit(harmonia::to_json(pt), out_path);
      } else if (sol_add_cmd->parsed()) {
        auto x = harmonia::solenoid_point_from_json(load_json(input));
        auto y = harmonia::solenoid_point_from_json(load_json(input2));
        emit(harmonia::to_json(harmonia::sol_add(x, y)), out_path);
      } else if (sol_char_cmd->parsed()) {
        auto x = harmonia::solenoid_point_from_json(load_json(input));
        harmonia::SolenoidChar chi{x.tower, level, Int(numerator_str)};
        Json doc;
        doc["value"] = harmonia::to_json(harmonia::sol_char_eval(chi, x));
        emit(doc, "");
      }
    } else if (spectrum_cmd->parsed()) {
      auto theta_fun = harmonia::group_fun_from_json(load_json(input));
      if (!moduli_csv.empty() && parse_moduli(moduli_csv) != theta_fun.group.moduli())
        throw std::invalid_argument("--moduli disagrees with the input file");
      auto pairs = harmonia::conv_operator_spectrum(theta_fun);
      auto radius = harmonia::spectral_radius_seq(theta_fun, kmax);
      Json doc;
      Json eigs = Json::array();
      double worst_defect = 0.0;
      for (const auto& pr : pairs) {
        eigs.push_back(harmonia::to_json(pr.eigenvalue));
        worst_defect = std::max(worst_defect, pr.defect);
      }
      if (worst_defect > tol)
        throw std::domain_error("eigenfunction defect " + std::to_string(worst_defect) +
                                " above tolerance");
      doc["eigenvalues"] = eigs;
      doc["defect_max"] = worst_defect;
      doc["radius_estimate"] = radius.estimate;
      doc["radius_sequence"] = radius.roots;
      emit(doc, out_path);
    } else if (check_cmd->parsed()) {
      int threads = 1;
      if (const char* env = std::getenv("HARMONIA_THREADS"))
        threads = std::max(1, std::atoi(env));
      auto results = harmonia::run_acceptance(seed, threads);
      Json doc;
      Json arr = Json::array();
      int failures = 0;
      for (const auto& res : results) {
        Json one;
        one["number"] = res.number;
        one["name"] = res.name;
        one["pass"] = res.pass;
        one["measured"] = res.measured;
        one["threshold"] = res.threshold;
        if (!res.note.empty()) one["note"] = res.note;
        arr.push_back(one);
        if (!res.pass) ++failures;
      }
      doc["criteria"] = arr;
      doc["failures"] = failures;
      doc["seed"] = seed;
      std::cout << doc.dump() << "\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const BadInputFile& e) {
    return fail("bad-input-file", e.what(), kExitBadInput);
  } catch (const std::domain_error& e) {
    return fail("domain", e.what(), kExitValidation);
  } catch (const std::invalid_argument& e) {
    return fail("invalid", e.what(), kExitValidation);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitValidation);
  }
  return 0;
}
