// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgraph/graph_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "qgraph/error.h"

namespace qgraph {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string &msg) {
    throw Error(ErrorCode::ParseError, msg);
}

const json &require(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    return *it;
}

double number_field(const json &obj, const char *key) {
    const json &x = require(obj, key);
    if (!x.is_number()) {
        parse_fail(std::string("field '") + key + "' must be a number");
    }
    double d = x.get<double>();
    if (!std::isfinite(d)) {
        parse_fail(std::string("field '") + key + "' must be finite");
    }
    return d;
}

Vertex vertex_field(const json &obj, const char *key) {
    const json &x = require(obj, key);
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
        parse_fail(std::string("field '") + key + "' must be a nonnegative integer");
    }
    auto v = x.get<unsigned long long>();
    if (v > UINT32_MAX) {
        parse_fail(std::string("field '") + key + "' is out of range");
    }
    return static_cast<Vertex>(v);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_angle(std::string_view text, std::string_view token) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double x = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x)) {
        parse_fail("bad angle '" + std::string(text) + "' in gate '" + std::string(token) + "'");
    }
    return x;
}

int parse_position(std::string_view text, std::string_view token) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || k < 0) {
        parse_fail("bad qubit position in gate '" + std::string(token) + "'");
    }
    return k;
}

GateOp parse_token(std::string_view token) {
    if (token == "CNOT") {
        return cnot_last_pair();
    }
    auto at = token.rfind('@');
    if (at == std::string_view::npos) {
        parse_fail("gate '" + std::string(token) + "' needs a position, e.g. H@1");
    }
    std::string_view name = trim(token.substr(0, at));
    int k = parse_position(trim(token.substr(at + 1)), token);
    OneQubitGate gate;
    if (name == "X") {
        gate = OneQubitGate::x();
    } else if (name == "Y") {
        gate = OneQubitGate::y();
    } else if (name == "Z") {
        gate = OneQubitGate::z();
    } else if (name == "H") {
        gate = OneQubitGate::h();
    } else if (name == "I") {
        gate = OneQubitGate::identity();
    } else if (name.size() > 3 && name.substr(0, 2) == "U(" && name.back() == ')') {
        std::string_view args = name.substr(2, name.size() - 3);
        double angles[3];
        for (int i = 0; i < 3; ++i) {
            auto comma = args.find(',');
            if ((i < 2) != (comma != std::string_view::npos)) {
                parse_fail("gate '" + std::string(token) + "' needs exactly three angles");
            }
            angles[i] = parse_angle(args.substr(0, comma), token);
            args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
        }
        gate = OneQubitGate::general(angles[0], angles[1], angles[2]);
    } else {
        parse_fail("unknown gate '" + std::string(name) + "'");
    }
    return gate_at(gate, k);
}

std::string format_real(double x) {
    if (x == 0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string bit_string(Vertex v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((v >> (n - 1 - i)) & 1) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

}  // namespace

json graph_to_json(const QGraph &g, const std::optional<std::string> &label) {
    json edges = json::array();
    for (const Edge &e : g.edges()) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"re", e.w.real()}, {"im", e.w.imag()}});
    }
    json loops = json::array();
    for (const Loop &l : g.loops()) {
        loops.push_back({{"v", l.v}, {"weight", l.weight}});
    }
    json out = {{"n_qubits", g.n_qubits()}, {"edges", std::move(edges)}, {"loops", std::move(loops)}};
    if (label) {
        out["metadata"] = {{"label", *label}};
    }
    return out;
}

GraphFile graph_from_json(const json &j) {
    if (!j.is_object()) {
        parse_fail("graph file must be a JSON object");
    }
    const json &nq = require(j, "n_qubits");
    if (!nq.is_number_integer()) {
        parse_fail("field 'n_qubits' must be an integer");
    }
    auto n = nq.get<long long>();
    if (n < 1 || n > kMaxQubits) {
        parse_fail("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    GraphBuilder b(static_cast<int>(n));
    std::set<std::pair<Vertex, Vertex>> seen_edges;
    std::set<Vertex> seen_loops;
    try {
        if (auto it = j.find("edges"); it != j.end()) {
            if (!it->is_array()) {
                parse_fail("field 'edges' must be an array");
            }
            for (const json &e : *it) {
                if (!e.is_object()) {
                    parse_fail("edge entries must be objects");
                }
                Vertex u = vertex_field(e, "u");
                Vertex v = vertex_field(e, "v");
                double re = number_field(e, "re");
                double im = e.contains("im") ? number_field(e, "im") : 0.0;
                if (!seen_edges.insert({std::min(u, v), std::max(u, v)}).second) {
                    parse_fail("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
                }
                b.add_edge(u, v, Complex{re, im});
            }
        }
        if (auto it = j.find("loops"); it != j.end()) {
            if (!it->is_array()) {
                parse_fail("field 'loops' must be an array");
            }
            for (const json &l : *it) {
                if (!l.is_object()) {
                    parse_fail("loop entries must be objects");
                }
                Vertex v = vertex_field(l, "v");
                if (!seen_loops.insert(v).second) {
                    parse_fail("duplicate loop at " + std::to_string(v));
                }
                b.add_loop(v, number_field(l, "weight"));
            }
        }
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) {
            throw;
        }
        parse_fail(e.what());
    }
    GraphFile out{std::move(b).build(), std::nullopt};
    if (auto it = j.find("metadata"); it != j.end()) {
        if (!it->is_object()) {
            parse_fail("field 'metadata' must be an object");
        }
        if (auto lab = it->find("label"); lab != it->end()) {
            if (!lab->is_string()) {
                parse_fail("metadata.label must be a string");
            }
            out.label = lab->get<std::string>();
        }
    }
    return out;
}

std::string serialize_graph(const QGraph &g, const std::optional<std::string> &label) {
    return graph_to_json(g, label).dump(2) + "\n";
}

GraphFile parse_graph(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::exception &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j);
}

std::string format_weight(Complex w) {
    if (w.imag() == 0) {
        return format_real(w.real());
    }
    std::string s = format_real(w.real());
    s += w.imag() < 0 ? "-" : "+";
    s += format_real(std::abs(w.imag()));
    s += "i";
    return s;
}

std::string format_deviation(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1e", x);
    std::string s = buf;
    auto e = s.find('e');
    if (e == std::string::npos) {
        return s;
    }
    std::string mantissa = s.substr(0, e);
    std::string exp = s.substr(e + 1);
    bool negative = !exp.empty() && exp.front() == '-';
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
        exp.erase(0, 1);
    }
    exp.erase(0, std::min(exp.find_first_not_of('0'), exp.size() - 1));
    return mantissa + "e" + (negative ? "-" : "") + exp;
}

std::string to_dot(const QGraph &g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        out << "  " << v << " [label=\"" << v << " (" << bit_string(static_cast<Vertex>(v), g.n_qubits())
            << ")\"];\n";
    }
    for (const Edge &e : g.edges()) {
        out << "  " << e.u << " -- " << e.v << " [label=\"" << format_weight(e.w) << "\"];\n";
    }
    for (const Loop &l : g.loops()) {
        out << "  " << l.v << " -- " << l.v << " [label=\"" << format_real(l.weight) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<GateOp> parse_gate_spec(std::string_view spec) {
    std::vector<GateOp> ops;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        char c = i < spec.size() ? spec[i] : ',';
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (--depth < 0) {
                parse_fail("unbalanced ')' in gate spec");
            }
        } else if (c == ',' && depth == 0) {
            std::string_view token = trim(spec.substr(start, i - start));
            if (token.empty()) {
                parse_fail("empty gate in spec '" + std::string(spec) + "'");
            }
            ops.push_back(parse_token(token));
            start = i + 1;
        }
    }
    if (depth != 0) {
        parse_fail("unbalanced '(' in gate spec");
    }
    return ops;
}

}  // namespace qgraph
