#include "hlf/json_io.hpp"

#include <limits>
#include <map>
#include <string>
#include <utility>

namespace hlf {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* field) {
  if (!j.is_object()) {
    throw ParseError("expected an object carrying field '" + std::string(field) + "'");
  }
  const auto it = j.find(field);
  if (it == j.end()) {
    throw ParseError("missing field '" + std::string(field) + "'");
  }
  return *it;
}

int require_int(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number_integer()) {
    throw ParseError("field '" + std::string(field) + "' must be an integer");
  }
  const long long raw = v.get<long long>();
  if (raw < std::numeric_limits<int>::min() || raw > std::numeric_limits<int>::max()) {
    throw ParseError("field '" + std::string(field) + "' is out of range");
  }
  return static_cast<int>(raw);
}

std::string require_string(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_string()) {
    throw ParseError("field '" + std::string(field) + "' must be a string");
  }
  return v.get<std::string>();
}

const json& require_array(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_array()) {
    throw ParseError("field '" + std::string(field) + "' must be an array");
  }
  return v;
}

int require_sign(const json& j, const char* field) {
  const int sign = require_int(j, field);
  if (sign != 1 && sign != -1) {
    throw ParseError("field '" + std::string(field) + "' must be 1 or -1");
  }
  return sign;
}

const std::map<std::string, MoveKind>& move_kind_table() {
  static const auto table = [] {
    std::map<std::string, MoveKind> m;
    for (MoveKind k :
         {MoveKind::H1, MoveKind::H1inv, MoveKind::H2, MoveKind::H2inv,
          MoveKind::H3, MoveKind::H3inv, MoveKind::SlideRight,
          MoveKind::SlideLeft, MoveKind::CyclicLeft, MoveKind::CyclicRight,
          MoveKind::ExpandSigma, MoveKind::ContractSigma}) {
      m[to_string(k)] = k;
    }
    return m;
  }();
  return table;
}

const std::map<std::string, VertexKind>& vertex_kind_table() {
  static const auto table = [] {
    std::map<std::string, VertexKind> m;
    for (VertexKind k :
         {VertexKind::Black, VertexKind::Crossing, VertexKind::Braiding,
          VertexKind::NucleonOut, VertexKind::NucleonIn,
          VertexKind::BigNucleonOut, VertexKind::BigNucleonIn,
          VertexKind::Transition, VertexKind::SigmaBurstOut,
          VertexKind::SigmaBurstIn}) {
      m[to_string(k)] = k;
    }
    return m;
  }();
  return table;
}

}  // namespace

std::string document_kind(const Document& doc) {
  switch (doc.payload.index()) {
    case 0: return "word";
    case 1: return "system";
    case 2: return "certificate";
    case 3: return "chart";
    default: return "report";
  }
}

nlohmann::json to_json(const Letter& letter) {
  return {{"kind", letter.kind == LetterKind::Zeta ? "zeta" : "sigma"},
          {"index", letter.index}};
}

nlohmann::json to_json(const SignedLetter& letter) {
  json j = to_json(letter.base);
  j["sign"] = letter.sign;
  return j;
}

nlohmann::json to_json(const WordPayload& word) {
  json letters = json::array();
  for (const SignedLetter& l : word.letters) letters.push_back(to_json(l));
  return {{"genus", word.g}, {"letters", std::move(letters)}};
}

nlohmann::json to_json(const HurwitzSystem& sys) {
  json entries = json::array();
  for (const FactorEntry& e : sys.entries) {
    json conj = json::array();
    for (const SignedLetter& l : e.conjugator) conj.push_back(to_json(l));
    entries.push_back({{"conjugator", std::move(conj)},
                       {"base", to_json(e.base)},
                       {"sign", e.sign}});
  }
  return {{"genus", sys.g}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const Move& move) {
  json j = {{"kind", to_string(move.kind)}, {"pos", move.pos}};
  if (move.i != 0) j["i"] = move.i;
  if (move.j != 0) j["j"] = move.j;
  if (move.h != 0) j["h"] = move.h;
  return j;
}

nlohmann::json to_json(const MoveCertificate& cert) {
  json moves = json::array();
  for (const Move& m : cert.moves) moves.push_back(to_json(m));
  return {{"start", to_json(cert.start)},
          {"moves", std::move(moves)},
          {"end", to_json(cert.end)}};
}

nlohmann::json to_json(const Chart& chart) {
  json vertices = json::array();
  for (const ChartVertex& v : chart.vertices) {
    json rotation = json::array();
    for (const EdgeEnd& ee : v.rotation) rotation.push_back(2 * ee.edge + ee.end);
    vertices.push_back({{"id", v.id},
                        {"kind", to_string(v.kind)},
                        {"rotation", std::move(rotation)}});
  }
  json edges = json::array();
  for (const ChartEdge& e : chart.edges) {
    edges.push_back({{"id", e.id},
                     {"label", to_json(e.label)},
                     {"from", e.from ? json(*e.from) : json(nullptr)},
                     {"to", e.to ? json(*e.to) : json(nullptr)}});
  }
  return {{"genus", chart.g},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

Letter letter_from_json(const nlohmann::json& j) {
  const std::string kind = require_string(j, "kind");
  if (kind != "zeta" && kind != "sigma") {
    throw ParseError("letter kind must be 'zeta' or 'sigma'");
  }
  Letter letter;
  letter.kind = kind == "zeta" ? LetterKind::Zeta : LetterKind::Sigma;
  letter.index = require_int(j, "index");
  return letter;
}

SignedLetter signed_letter_from_json(const nlohmann::json& j) {
  return SignedLetter{letter_from_json(j), require_sign(j, "sign")};
}

WordPayload word_from_json(const nlohmann::json& j) {
  WordPayload word;
  word.g = require_int(j, "genus");
  for (const json& l : require_array(j, "letters")) {
    word.letters.push_back(signed_letter_from_json(l));
  }
  return word;
}

HurwitzSystem system_from_json(const nlohmann::json& j) {
  HurwitzSystem sys;
  sys.g = require_int(j, "genus");
  for (const json& e : require_array(j, "entries")) {
    FactorEntry entry;
    for (const json& l : require_array(e, "conjugator")) {
      entry.conjugator.push_back(signed_letter_from_json(l));
    }
    entry.base = letter_from_json(require(e, "base"));
    entry.sign = require_sign(e, "sign");
    sys.entries.push_back(std::move(entry));
  }
  return sys;
}

Move move_from_json(const nlohmann::json& j) {
  const std::string kind = require_string(j, "kind");
  const auto it = move_kind_table().find(kind);
  if (it == move_kind_table().end()) {
    throw ParseError("unknown move kind '" + kind + "'");
  }
  Move move;
  move.kind = it->second;
  move.pos = require_int(j, "pos");
  if (j.contains("i")) move.i = require_int(j, "i");
  if (j.contains("j")) move.j = require_int(j, "j");
  if (j.contains("h")) move.h = require_int(j, "h");
  return move;
}

MoveCertificate certificate_from_json(const nlohmann::json& j) {
  MoveCertificate cert;
  cert.start = system_from_json(require(j, "start"));
  for (const json& m : require_array(j, "moves")) {
    cert.moves.push_back(move_from_json(m));
  }
  cert.end = system_from_json(require(j, "end"));
  return cert;
}

Chart chart_from_json(const nlohmann::json& j) {
  Chart chart;
  chart.g = require_int(j, "genus");
  for (const json& v : require_array(j, "vertices")) {
    ChartVertex vertex;
    vertex.id = require_int(v, "id");
    const std::string kind = require_string(v, "kind");
    const auto it = vertex_kind_table().find(kind);
    if (it == vertex_kind_table().end()) {
      throw ParseError("unknown vertex kind '" + kind + "'");
    }
    vertex.kind = it->second;
    for (const json& slot : require_array(v, "rotation")) {
      if (!slot.is_number_integer() || slot.get<long long>() < 0) {
        throw ParseError("rotation entries must be non-negative integers");
      }
      const int packed = static_cast<int>(slot.get<long long>());
      vertex.rotation.push_back(EdgeEnd{packed / 2, packed % 2});
    }
    chart.vertices.push_back(std::move(vertex));
  }
  for (const json& e : require_array(j, "edges")) {
    ChartEdge edge;
    edge.id = require_int(e, "id");
    edge.label = letter_from_json(require(e, "label"));
    for (const char* side : {"from", "to"}) {
      const json& v = require(e, side);
      std::optional<int>& slot = side[0] == 'f' ? edge.from : edge.to;
      if (v.is_null()) {
        slot = std::nullopt;
      } else if (v.is_number_integer()) {
        slot = static_cast<int>(v.get<long long>());
      } else {
        throw ParseError("edge endpoints must be vertex ids or null");
      }
    }
    chart.edges.push_back(std::move(edge));
  }
  return chart;
}

std::string serialize_document(const Document& doc) {
  json envelope;
  envelope["schema_version"] = kSchemaVersion;
  envelope["kind"] = document_kind(doc);
  envelope["payload"] = std::visit(
      [](const auto& payload) -> json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, ReportPayload>) {
          return payload.body;
        } else {
          return to_json(payload);
        }
      },
      doc.payload);
  return envelope.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  json envelope;
  try {
    envelope = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const std::string version = require_string(envelope, "schema_version");
    if (version != kSchemaVersion) {
      throw ParseError("unsupported schema_version '" + version + "'");
    }
    const std::string kind = require_string(envelope, "kind");
    const json& payload = require(envelope, "payload");
    Document doc;
    if (kind == "word") {
      doc.payload = word_from_json(payload);
    } else if (kind == "system") {
      doc.payload = system_from_json(payload);
    } else if (kind == "certificate") {
      doc.payload = certificate_from_json(payload);
    } else if (kind == "chart") {
      doc.payload = chart_from_json(payload);
    } else if (kind == "report") {
      if (!payload.is_object()) {
        throw ParseError("report payload must be an object");
      }
      doc.payload = ReportPayload{payload};
    } else {
      throw ParseError("unknown document kind '" + kind + "'");
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  }
}

}  // namespace hlf
