#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "teleseq/bigint.hpp"
#include "teleseq/construct.hpp"
#include "teleseq/error.hpp"
#include "teleseq/minimize.hpp"
#include "teleseq/monoid_oracle.hpp"
#include "teleseq/sequence.hpp"
#include "teleseq/telescopic.hpp"
#include "teleseq/transforms.hpp"

// JSON wire formats. Every integer value serializes as a decimal string so
// that readers in 53-bit-float languages cannot silently truncate; small
// structural fields (indices, lengths) stay plain JSON numbers.

namespace teleseq {

using json = nlohmann::json;

inline json to_json(const Int& n) { return n.str(); }

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start &&
        s.find_first_not_of("0123456789", start) == std::string::npos) {
      return Int(s);
    }
  }
  throw Error("ParseError", "expected an integer or decimal string, got " +
                                j.dump());
}

inline json to_json(const std::vector<Int>& values) {
  json arr = json::array();
  for (const Int& v : values) arr.push_back(v.str());
  return arr;
}

inline std::vector<Int> ints_from_json(const json& j) {
  if (!j.is_array()) {
    throw Error("ParseError", "expected an array of integers");
  }
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

inline json to_json(const Sequence& g) { return to_json(g.terms()); }

inline Sequence sequence_from_json(const json& j) {
  return Sequence(ints_from_json(j));
}

inline json to_json(const GcdProfile& p) {
  return json{{"d", to_json(p.d)}, {"c", to_json(p.c)},
              {"gcd", to_json(p.gcd)}};
}

inline json to_json(const MonoidSummary& s) {
  return json{{"gaps", to_json(s.gaps)},
              {"frobenius", to_json(s.frobenius)},
              {"genus", to_json(s.genus)},
              {"embedding_dimension", s.embedding_dimension}};
}

inline json to_json(const ZDecomposition& zd) {
  return json{{"d", to_json(zd.d)}, {"c", to_json(zd.c)},
              {"z", to_json(zd.z)}};
}

inline json to_json(const Representation& r) {
  return json{{"n1", to_json(r.n1)}, {"coeffs", to_json(r.coeffs)}};
}

inline json to_json(const TransformStep& step) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RhoStep>) {
          return json{{"op", "rho"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, TauStep>) {
          return json{{"op", "tau"}, {"g", s.g.str()}, {"m", s.m.str()}};
        } else if constexpr (std::is_same_v<T, PiStep>) {
          return json{{"op", "pi"}, {"n", s.n}};
        } else {
          return json{{"op", "swap"}, {"i", s.i}, {"j", s.j}};
        }
      },
      step);
}

inline json to_json(const TransformProgram& p) {
  json arr = json::array();
  for (const TransformStep& s : p.steps) arr.push_back(to_json(s));
  return arr;
}

inline TransformStep step_from_json(const json& j) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) {
    throw Error("ParseError", "transform step must be an object with \"op\"");
  }
  const std::string op = j["op"].get<std::string>();
  auto index_field = [&](const char* name) -> std::size_t {
    if (!j.contains(name)) {
      throw Error("ParseError",
                  "step \"" + op + "\" is missing field \"" + name + "\"");
    }
    Int v = int_from_json(j[name]);
    if (v < 1 || v > Int(1u << 30)) {
      throw Error("ParseError", "step index out of range: " + v.str());
    }
    return static_cast<std::size_t>(v);
  };
  if (op == "rho") return RhoStep{index_field("n")};
  if (op == "pi") return PiStep{index_field("n")};
  if (op == "swap") return SwapStep{index_field("i"), index_field("j")};
  if (op == "tau") {
    if (!j.contains("g") || !j.contains("m")) {
      throw Error("ParseError", "tau step needs fields \"g\" and \"m\"");
    }
    return TauStep{int_from_json(j["g"]), int_from_json(j["m"])};
  }
  throw Error("ParseError", "unknown transform op \"" + op + "\"");
}

inline TransformProgram program_from_json(const json& j) {
  if (!j.is_array()) {
    throw Error("ParseError", "a transform program is a JSON array of steps");
  }
  TransformProgram p;
  for (const auto& e : j) p.steps.push_back(step_from_json(e));
  return p;
}

inline json to_json(const RedundancyWitness& w) {
  json out{{"case", w.which == RedundancyWitness::Case::One ? "1" : "2"},
           {"n", w.n}};
  if (w.m) out["m"] = *w.m;
  return out;
}

inline json to_json(const ReductionTrace& trace) {
  json arr = json::array();
  for (const ReductionStep& step : trace) {
    json entry = to_json(step.witness);
    entry["before"] = to_json(step.before);
    entry["after"] = to_json(step.after);
    arr.push_back(std::move(entry));
  }
  return arr;
}

inline json to_json(const ConstructionRequest& req) {
  return json{{"d", to_json(req.d)}, {"c", to_json(req.c)},
              {"z", to_json(req.z)}};
}

inline ConstructionRequest construction_request_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("c") ||
      !j.contains("z")) {
    throw Error("ParseError",
                "construction request needs fields \"d\", \"c\", \"z\"");
  }
  ConstructionRequest req;
  req.d = int_from_json(j["d"]);
  req.c = ints_from_json(j["c"]);
  req.z = ints_from_json(j["z"]);
  return req;
}

inline FamilySpec family_spec_from_json(const json& j) {
  if (j.is_object() && j.contains("geometric")) {
    const json& g = j["geometric"];
    Int k = int_from_json(g.at("k"));
    if (k < 1 || k > Int(1u << 20)) {
      throw Error("ParseError", "geometric family length out of range");
    }
    return GeometricFamily{int_from_json(g.at("a")), int_from_json(g.at("b")),
                           static_cast<std::size_t>(k)};
  }
  if (j.is_object() && j.contains("supersymmetric")) {
    return SupersymmetricFamily{ints_from_json(j["supersymmetric"])};
  }
  if (j.is_object() && j.contains("compound")) {
    const json& c = j["compound"];
    return CompoundFamily{ints_from_json(c.at("a")), ints_from_json(c.at("b"))};
  }
  throw Error("ParseError",
              "family spec must contain \"geometric\", \"supersymmetric\" or "
              "\"compound\"");
}

}  // namespace teleseq
