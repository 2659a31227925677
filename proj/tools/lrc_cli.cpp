// Copyright 2026 The lrc-shorten Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: params, bounds, construct, encode, repair, decode,
// verify. Exit status 0 on success, 2 on invalid input or parameters, 3 on a
// decoding or verification failure.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/lrc.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitFailure = 3;

using Json = nlohmann::ordered_json;

std::vector<std::string> split_tokens(const std::string& text) {
  std::istringstream in(text);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

// Each token is a decimal symbol or "?" (erased).
std::vector<std::optional<lrc::Element>> parse_symbols(const lrc::GaloisField& F,
                                                       const std::string& text,
                                                       bool allow_erasures) {
  std::vector<std::optional<lrc::Element>> out;
  for (const auto& token : split_tokens(text)) {
    if (token == "?") {
      if (!allow_erasures)
        throw lrc::Error(lrc::Errc::InvalidElement, "'?' is only accepted in received words");
      out.emplace_back();
      continue;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw lrc::Error(lrc::Errc::InvalidElement, "malformed symbol '" + token + "'");
    out.emplace_back(F.element(value));
  }
  return out;
}

std::vector<lrc::Element> require_complete(std::vector<std::optional<lrc::Element>> symbols) {
  std::vector<lrc::Element> out;
  for (auto& s : symbols) out.push_back(*s);
  return out;
}

std::string join(std::span<const lrc::Element> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i].value());
  }
  return out;
}

std::string read_text(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return inline_text;
  std::ostringstream buffer;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw lrc::Error(lrc::Errc::InvalidParameters, "cannot open " + file);
    buffer << in.rdbuf();
  } else {
    buffer << std::cin.rdbuf();
  }
  return buffer.str();
}

Json bounds_json(const lrc::CodeParams& p, const lrc::BoundsReport& b) {
  Json doc;
  doc["q"] = p.q;
  doc["n"] = p.n;
  doc["k"] = p.k;
  doc["r"] = p.r;
  doc["s"] = p.s;
  doc["t"] = p.t;
  doc["m"] = p.m;
  doc["n_bar"] = p.n_bar;
  doc["k_prime"] = p.k_prime;
  doc["subgroup"] = std::string(lrc::to_string(p.subgroup));
  doc["d_singleton"] = b.d_singleton;
  doc["d_improved"] = b.d_improved ? Json(*b.d_improved) : Json("NOT_APPLICABLE");
  doc["delta"] = b.delta;
  doc["d_predicted"] = b.d_predicted;
  doc["optimal"] = b.optimal;
  doc["reason"] = std::string(lrc::to_string(b.reason));
  return doc;
}

int cmd_params(std::uint32_t q, std::size_t n, std::size_t k, std::size_t r, bool json) {
  const auto params = lrc::validate_params(q, n, k, r);
  const auto report = lrc::optimality_report(params);
  if (json) {
    std::cout << bounds_json(params, report).dump(2) << "\n";
    return 0;
  }
  std::cout << "code: q=" << q << " n=" << n << " k=" << k << " r=" << r << "\n"
            << "derived: s=" << params.s << " t=" << params.t << " m=" << params.m
            << " n_bar=" << params.n_bar << " k'=" << params.k_prime << " ("
            << lrc::to_string(params.subgroup) << " cosets)\n"
            << "singleton-like bound: " << report.d_singleton << "\n"
            << "improved bound: "
            << (report.d_improved ? std::to_string(*report.d_improved) : "not applicable") << "\n"
            << "delta: " << report.delta << "\n"
            << "distance d=" << report.d_predicted << "\n"
            << "optimal: " << (report.optimal ? "yes" : "no") << ", "
            << lrc::to_string(report.reason) << "\n";
  return 0;
}

int cmd_bounds(std::size_t n, std::size_t k, std::size_t r, bool json) {
  if (n == 0 || k == 0 || r == 0)
    throw lrc::Error(lrc::Errc::InvalidParameters, "n, k, r must be positive");
  const long singleton = lrc::singleton_like_bound(n, k, r);
  const bool rate = lrc::rate_bound_holds(n, k, r);
  const auto improved = lrc::improved_bound(n, k, r);
  if (json) {
    Json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["r"] = r;
    doc["d_singleton"] = singleton;
    doc["rate_bound_holds"] = rate;
    doc["d_improved"] = improved ? Json(*improved) : Json("NOT_APPLICABLE");
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "singleton-like bound: " << singleton << "\n"
            << "rate bound k <= n - ceil(n/(r+1)): " << (rate ? "holds" : "violated") << "\n"
            << "improved bound: " << (improved ? std::to_string(*improved) : "not applicable")
            << "\n";
  return 0;
}

int cmd_construct(std::uint32_t q, std::size_t n, std::size_t k, std::size_t r,
                  const std::string& out) {
  const auto spec = lrc::build_code(lrc::validate_params(q, n, k, r));
  if (out.empty() || out == "-") {
    std::cout << lrc::to_spec_json(spec);
  } else {
    lrc::save_spec_file(spec, out);
  }
  return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& message, const std::string& file) {
  const auto spec = lrc::load_spec_file(spec_path);
  const auto msg = require_complete(parse_symbols(spec.field, read_text(message, file), false));
  std::cout << join(lrc::encode(msg, spec)) << "\n";
  return 0;
}

int cmd_repair(const std::string& spec_path, const std::string& codeword, std::size_t index) {
  const auto spec = lrc::load_spec_file(spec_path);
  if (index < 1 || index > spec.params.n)
    throw lrc::Error(lrc::Errc::IndexOutOfRange, "--index must be in [1, n]");
  auto symbols = parse_symbols(spec.field, codeword, true);
  if (symbols.size() != spec.params.n)
    throw lrc::Error(lrc::Errc::LengthMismatch, "codeword must have n symbols");
  const std::size_t coordinate = index - 1;
  std::vector<lrc::Element> word(spec.params.n);
  const auto group = lrc::locate_group(spec, coordinate);
  for (std::size_t c : group.helpers) {
    if (!symbols[c])
      throw lrc::Error(lrc::Errc::InvalidElement, "helper coordinate " + std::to_string(c + 1) +
                                                      " is erased");
    word[c] = *symbols[c];
  }
  const auto outcome = lrc::repair_from_word(spec, word, coordinate);
  std::cout << "coordinate " << index << " (alpha=" << spec.eval_points[coordinate].value()
            << ") in repair group " << group.block + 1 << "\n";
  for (std::size_t c : group.helpers)
    std::cout << "helper " << c + 1 << " alpha=" << spec.eval_points[c].value()
              << " value=" << word[c].value() << "\n";
  for (auto z : group.implicit_zeros)
    std::cout << "implicit-zero alpha=" << z.value() << " value=0\n";
  std::cout << "values used: " << outcome.used.size() << "\n"
            << "repaired: " << outcome.value.value() << "\n";
  return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& received) {
  const auto spec = lrc::load_spec_file(spec_path);
  const auto word = parse_symbols(spec.field, received, true);
  std::cout << join(lrc::decode_erasures(spec, word)) << "\n";
  return 0;
}

int cmd_verify(const std::string& spec_path, std::uint64_t budget, std::uint64_t seed,
               unsigned workers) {
  const auto spec = lrc::load_spec_file(spec_path);
  const auto report = lrc::verify_code(spec, budget, seed, workers);
  Json doc;
  doc["rank_ok"] = report.rank_ok;
  doc["generator_consistent"] = report.generator_consistent;
  doc["distance_found"] = report.distance_found;
  doc["distance_expected"] = report.distance_expected;
  doc["locality_ok"] = report.locality_ok;
  doc["shortening_ok"] = report.shortening_ok;
  doc["erasure_ok"] = report.erasure_ok;
  doc["enumerated_words"] = report.enumerated_words;
  doc["all_passed"] = report.all_passed();
  std::cout << doc.dump(2) << "\n";
  return report.all_passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-optimal locally recoverable codes of any length n <= q"};
  app.require_subcommand(1);

  std::uint32_t q = 0;
  std::size_t n = 0, k = 0, r = 0, index = 0;
  std::string spec_path, out_path, message, message_file, codeword, received;
  std::uint64_t budget = 5'000'000, seed = 1;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  bool json = false;

  auto add_code_params = [&](CLI::App* cmd, bool with_q) {
    if (with_q) cmd->add_option("--q", q, "field order")->required();
    cmd->add_option("--n", n, "code length")->required();
    cmd->add_option("--k", k, "dimension")->required();
    cmd->add_option("--r", r, "locality")->required();
  };

  auto* params = app.add_subcommand("params", "validate parameters and report bounds");
  add_code_params(params, true);
  params->add_flag("--json", json, "print a JSON report");

  auto* bounds = app.add_subcommand("bounds", "distance and rate bounds for (n, k, r)");
  add_code_params(bounds, false);
  bounds->add_flag("--json", json, "print a JSON report");

  auto* construct = app.add_subcommand("construct", "build a code and write its spec file");
  add_code_params(construct, true);
  construct->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* encode = app.add_subcommand("encode", "encode k symbols into a codeword");
  encode->add_option("--spec", spec_path, "code spec file")->required();
  encode->add_option("--message", message, "space-separated symbols (stdin if omitted)");
  encode->add_option("--message-file", message_file, "file holding the message");

  auto* repair = app.add_subcommand("repair", "repair one coordinate from its repair group");
  repair->add_option("--spec", spec_path, "code spec file")->required();
  repair->add_option("--codeword", codeword, "n symbols; the repaired one may be '?'")->required();
  repair->add_option("--index", index, "1-based coordinate to repair")->required();

  auto* decode = app.add_subcommand("decode", "recover the message from a word with '?' erasures");
  decode->add_option("--spec", spec_path, "code spec file")->required();
  decode->add_option("--received", received, "n symbols or '?'")->required();

  auto* verify = app.add_subcommand("verify", "check rank, distance, locality, shortening, erasures");
  verify->add_option("--spec", spec_path, "code spec file")->required();
  verify->add_option("--budget", budget, "maximum number of messages to enumerate");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--workers", workers, "enumeration threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*params) return cmd_params(q, n, k, r, json);
    if (*bounds) return cmd_bounds(n, k, r, json);
    if (*construct) return cmd_construct(q, n, k, r, out_path);
    if (*encode) return cmd_encode(spec_path, message, message_file);
    if (*repair) return cmd_repair(spec_path, codeword, index);
    if (*decode) return cmd_decode(spec_path, received);
    if (*verify) return cmd_verify(spec_path, budget, seed, workers);
  } catch (const lrc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == lrc::Errc::Unrecoverable ? kExitFailure : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
