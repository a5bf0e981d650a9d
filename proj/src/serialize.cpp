/*
 * Copyright 2026 The gsnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsnet/error.hpp"
#include "gsnet/network.hpp"

namespace gsnet {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& ptr) {
  if (!obj.is_object()) throw ParseError("expected an object", ptr);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", ptr);
  return *it;
}

std::size_t count_field(const json& obj, const char* key, const std::string& ptr) {
  const json& v = field(obj, key, ptr);
  if (!v.is_number_unsigned()) throw ParseError("expected a non-negative integer", ptr + "/" + key);
  return v.get<std::size_t>();
}

std::vector<double> number_array(const json& obj, const char* key, const std::string& ptr) {
  const json& v = field(obj, key, ptr);
  const std::string here = ptr + "/" + key;
  if (!v.is_array()) throw ParseError("expected an array of numbers", here);
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw ParseError("expected a number", here + "/" + std::to_string(i));
    out.push_back(v[i].get<double>());
  }
  return out;
}

}  // namespace

std::string serialize(const GroupSortNetwork& net) {
  json doc;
  doc["version"] = kNetworkFormatVersion;
  doc["input_dim"] = net.input_dim();
  doc["grouping_size"] = net.grouping_size();
  doc["activation"] = net.activation() == Activation::GroupSort ? "groupsort" : "relu";
  json layers = json::array();
  for (const auto& l : net.layers()) {
    json jl;
    jl["rows"] = l.weight.rows();
    jl["cols"] = l.weight.cols();
    jl["weights"] = std::vector<double>(l.weight.entries().begin(), l.weight.entries().end());
    jl["bias"] = l.bias;
    layers.push_back(std::move(jl));
  }
  doc["layers"] = std::move(layers);
  return doc.dump(1);
}

GroupSortNetwork deserialize(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  const std::size_t version = count_field(doc, "version", "");
  if (version != kNetworkFormatVersion) {
    throw ParseError("unsupported version " + std::to_string(version), "/version");
  }
  const std::size_t input_dim = count_field(doc, "input_dim", "");
  const std::size_t k = count_field(doc, "grouping_size", "");
  Activation act = Activation::GroupSort;
  if (auto it = doc.find("activation"); it != doc.end()) {
    if (*it == "relu") {
      act = Activation::ReLU;
    } else if (*it != "groupsort") {
      throw ParseError("unknown activation", "/activation");
    }
  }
  const json& jl = field(doc, "layers", "");
  if (!jl.is_array()) throw ParseError("expected an array", "/layers");
  std::vector<GroupSortLayer> layers;
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string ptr = "/layers/" + std::to_string(i);
    const std::size_t rows = count_field(jl[i], "rows", ptr);
    const std::size_t cols = count_field(jl[i], "cols", ptr);
    auto weights = number_array(jl[i], "weights", ptr);
    auto bias = number_array(jl[i], "bias", ptr);
    if (weights.size() != rows * cols) {
      throw ParseError("expected " + std::to_string(rows * cols) + " weights, got " +
                           std::to_string(weights.size()),
                       ptr + "/weights");
    }
    layers.push_back({Matrix(rows, cols, std::move(weights)), std::move(bias)});
  }
  try {
    return GroupSortNetwork(input_dim, k, std::move(layers), act);
  } catch (const DimensionError& e) {
    throw ParseError(e.what(), "/layers");
  }
}

void save_network(const GroupSortNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << serialize(net) << '\n';
}

GroupSortNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

}  // namespace gsnet
