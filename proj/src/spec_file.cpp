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

#include "lrc/spec_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrc/error.hpp"

namespace lrc {
namespace {

using Json = nlohmann::ordered_json;

Json elements_to_json(std::span<const Element> xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(x.value());
  return out;
}

template <typename T>
void expect_equal(const Json& doc, const char* key, const T& expected) {
  if (!doc.contains(key)) throw Error(Errc::InvalidSpecFile, std::string("missing key '") + key + "'");
  if (doc.at(key) != Json(expected))
    throw Error(Errc::InvalidSpecFile,
                std::string("field '") + key + "' does not match the code rebuilt from (q, n, k, r)");
}

std::size_t get_size(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_unsigned())
    throw Error(Errc::InvalidSpecFile, std::string("key '") + key + "' must be a non-negative integer");
  return doc.at(key).get<std::size_t>();
}

}  // namespace

std::string to_spec_json(const CodeSpec& spec) {
  const auto& p = spec.params;
  Json doc;
  doc["version"] = kSpecFileVersion;
  doc["q"] = p.q;
  doc["n"] = p.n;
  doc["k"] = p.k;
  doc["r"] = p.r;
  doc["s"] = p.s;
  doc["t"] = p.t;
  doc["m"] = p.m;
  doc["n_bar"] = p.n_bar;
  doc["subgroup"] = {{"kind", std::string(to_string(spec.subgroup.kind))},
                     {"elements", elements_to_json(spec.subgroup.elements)}};
  Json blocks = Json::array();
  for (const auto& block : spec.partition.blocks) blocks.push_back(elements_to_json(block));
  doc["blocks"] = std::move(blocks);
  doc["B"] = elements_to_json(spec.partition.removed);
  doc["gamma"] = spec.good.gamma.value();
  doc["g_tilde"] = elements_to_json(spec.good.normalized.coefficients());
  doc["h_B"] = elements_to_json(spec.h_B.coefficients());
  doc["eval_points"] = elements_to_json(spec.eval_points);
  Json rows = Json::array();
  for (std::size_t r = 0; r < spec.generator.rows(); ++r)
    rows.push_back(elements_to_json(spec.generator.row(r)));
  doc["generator_matrix"] = std::move(rows);
  // One top-level key per line, values compact.
  std::string text = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first) text += ",\n";
    first = false;
    text += "  " + Json(key).dump() + ": " + value.dump();
  }
  return text + "\n}\n";
}

CodeSpec from_spec_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::InvalidSpecFile, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::InvalidSpecFile, "spec file must be a JSON object");
  if (get_size(doc, "version") != kSpecFileVersion)
    throw Error(Errc::InvalidSpecFile, "unsupported spec file version");

  const std::size_t q = get_size(doc, "q");
  if (q > UINT32_MAX) throw Error(Errc::InvalidSpecFile, "q out of range");
  CodeParams params;
  try {
    params = validate_params(static_cast<std::uint32_t>(q), get_size(doc, "n"), get_size(doc, "k"),
                             get_size(doc, "r"));
  } catch (const Error& e) {
    throw Error(Errc::InvalidSpecFile, std::string("invalid parameters: ") + e.what());
  }

  CodeSpec spec = build_code(params);
  const Json canonical = Json::parse(to_spec_json(spec));
  for (const char* key : {"s", "t", "m", "n_bar", "subgroup", "blocks", "B", "gamma", "g_tilde",
                          "h_B", "eval_points"})
    expect_equal(doc, key, canonical.at(key));

  if (!doc.contains("generator_matrix") || !doc.at("generator_matrix").is_array())
    throw Error(Errc::InvalidSpecFile, "missing generator_matrix");
  const Json& rows = doc.at("generator_matrix");
  if (rows.size() != params.k) throw Error(Errc::InvalidSpecFile, "generator_matrix must have k rows");
  for (std::size_t r = 0; r < params.k; ++r) {
    const Json& row = rows.at(r);
    if (!row.is_array() || row.size() != params.n)
      throw Error(Errc::InvalidSpecFile, "generator_matrix rows must have n entries");
    for (std::size_t c = 0; c < params.n; ++c) {
      if (!row.at(c).is_number_unsigned() || row.at(c).get<std::uint64_t>() >= params.q)
        throw Error(Errc::InvalidSpecFile, "generator_matrix entry is not a field element");
      spec.generator(r, c) = Element{row.at(c).get<std::uint32_t>()};
    }
  }
  check_invariants(spec);
  return spec;
}

void save_spec_file(const CodeSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidParameters, "cannot open " + path.string() + " for writing");
  out << to_spec_json(spec);
  if (!out) throw Error(Errc::InvalidParameters, "failed writing " + path.string());
}

CodeSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidSpecFile, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_spec_json(buffer.str());
}

}  // namespace lrc
