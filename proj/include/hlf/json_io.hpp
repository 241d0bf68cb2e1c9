#pragma once

// JSON interchange for every payload the tool reads or writes.  Each file is
// an envelope {"schema_version", "kind", "payload"} wrapping one of five
// payload kinds: word, system, certificate, chart, report.  Parsing is
// strict about shape -- a missing or mistyped field raises ParseError -- but
// leaves semantic checks (index ranges, planarity, verification) to the
// owning module.  Serialization is deterministic: object keys are emitted in
// sorted order with fixed indentation, so equal values produce equal bytes.

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "hlf/chart.hpp"
#include "hlf/hurwitz.hpp"
#include "hlf/word.hpp"

namespace hlf {

inline constexpr const char* kSchemaVersion = "1";

// A bare word does not know its genus, so the payload carries both.
struct WordPayload {
  int g = 1;
  Word letters;

  friend bool operator==(const WordPayload&, const WordPayload&) = default;
};

// Free-form report body (counts, invariants, normal forms, search results).
struct ReportPayload {
  nlohmann::json body = nlohmann::json::object();

  friend bool operator==(const ReportPayload&, const ReportPayload&) = default;
};

using DocumentPayload =
    std::variant<WordPayload, HurwitzSystem, MoveCertificate, Chart, ReportPayload>;

struct Document {
  DocumentPayload payload;

  friend bool operator==(const Document&, const Document&) = default;
};

// Raised on malformed JSON or a payload that does not match its schema.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The envelope kind string of the stored payload.
std::string document_kind(const Document& doc);

// Payload fragments.  `to_json(Letter)` writes {"kind","index"}; the signed
// form adds "sign".  Chart rotations pack an edge end as 2*edge + end.
nlohmann::json to_json(const Letter& letter);
nlohmann::json to_json(const SignedLetter& letter);
nlohmann::json to_json(const WordPayload& word);
nlohmann::json to_json(const HurwitzSystem& sys);
nlohmann::json to_json(const Move& move);
nlohmann::json to_json(const MoveCertificate& cert);
nlohmann::json to_json(const Chart& chart);

Letter letter_from_json(const nlohmann::json& j);
SignedLetter signed_letter_from_json(const nlohmann::json& j);
WordPayload word_from_json(const nlohmann::json& j);
HurwitzSystem system_from_json(const nlohmann::json& j);
Move move_from_json(const nlohmann::json& j);
MoveCertificate certificate_from_json(const nlohmann::json& j);
Chart chart_from_json(const nlohmann::json& j);

// Whole documents.  parse_document throws ParseError; serialize_document
// never fails and ends its output with a newline.
std::string serialize_document(const Document& doc);
Document parse_document(const std::string& text);

}  // namespace hlf
