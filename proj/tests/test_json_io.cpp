#include "doctest.h"

#include "hlf/json_io.hpp"

#include <string>

using namespace hlf;

namespace {

Document round_tripped(const Document& doc) {
  return parse_document(serialize_document(doc));
}

}  // namespace

TEST_CASE("every payload kind survives a round trip") {
  // Word with mixed signs.
  Document word;
  word.payload = WordPayload{2, {pos(zeta(1)), neg(sigma(1)), neg(zeta(5))}};
  CHECK(document_kind(word) == "word");
  CHECK(round_tripped(word) == word);

  // Plain and decorated systems.
  Document system;
  system.payload = basic_type2(Genus(2), 1);
  CHECK(document_kind(system) == "system");
  CHECK(round_tripped(system) == system);

  HurwitzSystem decorated;
  decorated.g = 3;
  decorated.entries.push_back(FactorEntry{{pos(zeta(2)), neg(zeta(7))}, sigma(1), -1});
  Document fancy;
  fancy.payload = decorated;
  CHECK(round_tripped(fancy) == fancy);

  // A derived certificate, including cyclic and index-carrying moves.
  Document cert;
  cert.payload = derive_type2_certificate(Genus(2), 1);
  CHECK(document_kind(cert) == "certificate");
  CHECK(round_tripped(cert) == cert);

  MoveCertificate contract;
  contract.start = basic_type2_expanded(Genus(2), 1);
  contract.moves.push_back(Move{MoveKind::ContractSigma, 14, 0, 0, 1});
  contract.end = basic_type2(Genus(2), 1);
  Document contract_doc;
  contract_doc.payload = contract;
  CHECK(round_tripped(contract_doc) == contract_doc);

  // Charts, with and without hoops.
  Document chart;
  chart.payload = build_n0(Genus(2));
  CHECK(document_kind(chart) == "chart");
  CHECK(round_tripped(chart) == chart);

  Chart hooped = build_f1(Genus(1));
  hooped.edges.push_back({7, zeta(1), std::nullopt, std::nullopt});
  Document hoop_doc;
  hoop_doc.payload = hooped;
  CHECK(round_tripped(hoop_doc) == hoop_doc);

  // Free-form report.
  ReportPayload report;
  report.body = {{"E", 30}, {"divisible", true}, {"c", {1, 0}}};
  Document report_doc;
  report_doc.payload = report;
  CHECK(document_kind(report_doc) == "report");
  CHECK(round_tripped(report_doc) == report_doc);
}

TEST_CASE("serialization is deterministic byte for byte") {
  Document doc;
  doc.payload = derive_type2_certificate(Genus(2), 1);
  const std::string once = serialize_document(doc);
  const std::string twice = serialize_document(doc);
  CHECK(once == twice);
  CHECK(serialize_document(parse_document(once)) == once);
  CHECK(once.back() == '\n');
}

TEST_CASE("the envelope is checked before the payload") {
  CHECK_THROWS_AS(parse_document("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_document("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"word","payload":{}})"), ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"schema_version":"9","kind":"word","payload":{}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"schema_version":"1","kind":"poem","payload":{}})"),
      ParseError);
  CHECK_THROWS_AS(parse_document(R"({"schema_version":"1","kind":"word"})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"schema_version":"1","kind":"report","payload":[]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"schema_version":1,"kind":"word","payload":{}})"),
      ParseError);
}

TEST_CASE("payload schemas reject malformed fields") {
  const std::string word_prefix = R"({"schema_version":"1","kind":"word","payload":)";
  CHECK_THROWS_AS(parse_document(word_prefix + R"({"letters":[]}})"), ParseError);
  CHECK_THROWS_AS(
      parse_document(word_prefix +
                     R"({"genus":2,"letters":[{"kind":"tau","index":1,"sign":1}]}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(word_prefix +
                     R"({"genus":2,"letters":[{"kind":"zeta","index":1,"sign":0}]}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(word_prefix + R"({"genus":"two","letters":[]}})"),
      ParseError);

  const std::string sys_prefix = R"({"schema_version":"1","kind":"system","payload":)";
  CHECK_THROWS_AS(
      parse_document(sys_prefix + R"({"genus":2,"entries":[{"sign":1}]}})"),
      ParseError);

  const std::string cert_prefix =
      R"({"schema_version":"1","kind":"certificate","payload":)";
  CHECK_THROWS_AS(
      parse_document(cert_prefix +
                     R"({"start":{"genus":2,"entries":[]},"moves":[{"kind":"H9","pos":0}],)"
                     R"("end":{"genus":2,"entries":[]}}})"),
      ParseError);

  const std::string chart_prefix = R"({"schema_version":"1","kind":"chart","payload":)";
  CHECK_THROWS_AS(
      parse_document(chart_prefix +
                     R"({"genus":1,"vertices":[{"id":0,"kind":"black","rotation":[-2]}],"edges":[]}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(chart_prefix +
                     R"({"genus":1,"vertices":[{"id":0,"kind":"round","rotation":[]}],"edges":[]}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_document(
          chart_prefix +
          R"({"genus":1,"vertices":[],"edges":[{"id":0,"label":{"kind":"zeta","index":1},"from":"a","to":null}]}})"),
      ParseError);
}

TEST_CASE("rotation entries pack edge ends as twice the id plus the side") {
  const std::string text =
      R"({"schema_version":"1","kind":"chart","payload":{"genus":1,)"
      R"("vertices":[{"id":4,"kind":"black","rotation":[11]}],)"
      R"("edges":[{"id":5,"label":{"kind":"zeta","index":1},"from":null,"to":4}]}})";
  const Document doc = parse_document(text);
  const Chart& chart = std::get<Chart>(doc.payload);
  REQUIRE(chart.vertices.size() == 1);
  CHECK(chart.vertices[0].rotation == std::vector<EdgeEnd>{EdgeEnd{5, 1}});
  CHECK(chart.edges[0].from == std::nullopt);
  CHECK(chart.edges[0].to == 4);
}

TEST_CASE("moves serialize compactly and keep their parameters") {
  const Move contract{MoveKind::ContractSigma, 14, 0, 0, 2};
  const nlohmann::json j = to_json(contract);
  CHECK(j.contains("h"));
  CHECK_FALSE(j.contains("i"));
  CHECK(move_from_json(j) == contract);

  const Move swap{MoveKind::H1, 3, 1, 4, 0};
  CHECK(move_from_json(to_json(swap)) == swap);
}
