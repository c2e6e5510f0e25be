#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace spectral_twins {

/// Insertion-ordered JSON emitter. Object keys serialize in the order they
/// were set and doubles always format as %.15g, so identical inputs yield
/// byte-identical text.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::Null) {}
  JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
  JsonValue(int n) : kind_(Kind::Number), num_(n) {}
  JsonValue(double n) : kind_(Kind::Number), num_(n) {}
  JsonValue(const char* s) : kind_(Kind::String), str_(s) {}
  JsonValue(std::string s) : kind_(Kind::String), str_(std::move(s)) {}

  static JsonValue object();
  static JsonValue array();

  JsonValue& set(const std::string& key, JsonValue v);  // object only
  JsonValue& push(JsonValue v);                         // array only

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Null, Bool, Number, String, Array, Object };

  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  double num_ = 0.0;
  std::string str_;
  std::vector<JsonValue> arr_;
  std::vector<std::pair<std::string, JsonValue>> obj_;
};

/// %.15g rendering used for every number the toolkit emits.
std::string format_double(double x);

std::string json_escape(const std::string& s);

}  // namespace spectral_twins
