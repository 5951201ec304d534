#include "ringlab/files.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "ringlab/notation.hpp"

namespace ringlab {

namespace {

using json = nlohmann::ordered_json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error("format-error", std::string("bad JSON: ") + e.what());
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok)
      throw error("format-error",
                  "unknown field at " + where + "." + it.key());
  }
}

}  // namespace

MethodFile MethodFile::from_method(const Method& m, const std::string& name) {
  MethodFile f;
  f.stage = m.stage;
  f.name = name;
  f.start_row = format_row(m.start);
  for (const Perm& t : m.transitions) f.transitions.push_back(format_cycles(t));
  return f;
}

Method MethodFile::to_method() const {
  Row start =
      start_row.empty() ? Row::rounds(stage) : parse_row(start_row);
  if (start.size() != stage)
    throw error("format-error", "start_row length != stage");
  std::vector<Perm> word;
  word.reserve(transitions.size());
  for (const std::string& t : transitions)
    word.push_back(parse_cycles(t, stage));
  return Method::from_transitions(stage, start, std::move(word));
}

MethodFile read_method_file(std::istream& in) {
  json j = parse_stream(in);
  if (!j.is_object()) throw error("format-error", "top level must be an object");
  reject_unknown(j, {"stage", "name", "start_row", "transitions"}, "$");
  MethodFile f;
  if (!j.contains("stage") || !j["stage"].is_number_integer())
    throw error("format-error", "missing integer field at $.stage");
  f.stage = j["stage"].get<int>();
  if (f.stage < 1) throw error("format-error", "$.stage must be >= 1");
  if (!j.contains("name") || !j["name"].is_string() ||
      j["name"].get<std::string>().empty())
    throw error("format-error", "missing non-empty string at $.name");
  f.name = j["name"].get<std::string>();
  if (j.contains("start_row")) {
    if (!j["start_row"].is_string())
      throw error("format-error", "$.start_row must be a string");
    f.start_row = j["start_row"].get<std::string>();
  }
  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw error("format-error", "missing array at $.transitions");
  int i = 0;
  for (const auto& t : j["transitions"]) {
    if (!t.is_string())
      throw error("format-error",
                  "$.transitions[" + std::to_string(i) + "] must be a string");
    f.transitions.push_back(t.get<std::string>());
    ++i;
  }
  // every transition must parse at the declared stage
  for (std::size_t k = 0; k < f.transitions.size(); ++k) {
    try {
      parse_cycles(f.transitions[k], f.stage);
    } catch (const error& e) {
      throw error("format-error", "$.transitions[" + std::to_string(k) +
                                      "]: " + e.what());
    }
  }
  return f;
}

void write_method_file(std::ostream& out, const MethodFile& f) {
  json j;
  j["stage"] = f.stage;
  j["name"] = f.name;
  if (!f.start_row.empty()) j["start_row"] = f.start_row;
  j["transitions"] = f.transitions;
  out << j.dump(2) << '\n';
}

CompositionFile read_composition_file(std::istream& in) {
  json j = parse_stream(in);
  if (!j.is_object()) throw error("format-error", "top level must be an object");
  reject_unknown(j, {"scheme", "leads"}, "$");
  CompositionFile f;
  if (!j.contains("scheme") || !j["scheme"].is_string())
    throw error("format-error", "missing string field at $.scheme");
  f.scheme = j["scheme"].get<std::string>();
  if (!j.contains("leads") || !j["leads"].is_array())
    throw error("format-error", "missing array at $.leads");
  int i = 0;
  for (const auto& l : j["leads"]) {
    if (!l.is_string() ||
        (l.get<std::string>() != "P" && l.get<std::string>() != "B"))
      throw error("format-error",
                  "$.leads[" + std::to_string(i) + "] must be \"P\" or \"B\"");
    f.leads.push_back(l.get<std::string>()[0]);
    ++i;
  }
  if (f.leads.empty()) throw error("format-error", "$.leads must be non-empty");
  return f;
}

void write_composition_file(std::ostream& out, const CompositionFile& f) {
  json j;
  j["scheme"] = f.scheme;
  json arr = json::array();
  for (char l : f.leads) arr.push_back(std::string(1, l));
  j["leads"] = arr;
  out << j.dump(2) << '\n';
}

}  // namespace ringlab
