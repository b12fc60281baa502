#include "gammaq/state_io.hpp"

#include <cmath>
#include <fstream>

namespace gammaq {

namespace {

void check_file_dims(const Dims& dims) {
  for (int n : dims.list()) {
    if (n > 10) {
      throw ValidationError("state file: local dimension " + std::to_string(n) +
                            " exceeds the ket-digit limit of 10");
    }
  }
}

void reject_unknown_fields(const nlohmann::json& obj,
                           std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* name : allowed) {
      if (it.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError("state file: unknown field '" + it.key() + "' in " + where);
    }
  }
}

double number_field(const nlohmann::json& obj, const char* name) {
  if (!obj.contains(name)) {
    return 0.0;
  }
  const auto& v = obj.at(name);
  if (!v.is_number()) {
    throw ValidationError(std::string("state file: field '") + name + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

std::string ket_string(const Dims& dims, std::int64_t joint) {
  check_file_dims(dims);
  const MultiIndex labels = labels_of(dims, joint);
  std::string out(labels.size(), '0');
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out[i] = static_cast<char>('0' + labels[i] - 1);
  }
  return out;
}

MultiIndex parse_ket(const Dims& dims, const std::string& ket) {
  check_file_dims(dims);
  if (static_cast<int>(ket.size()) != dims.count()) {
    throw ValidationError("state file: ket '" + ket + "' has " +
                          std::to_string(ket.size()) + " digits, expected " +
                          std::to_string(dims.count()));
  }
  MultiIndex labels(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    const char c = ket[u - 1];
    if (c < '0' || c > '9') {
      throw ValidationError("state file: ket '" + ket + "' has a non-digit character");
    }
    const int digit = c - '0';
    if (digit >= dims.dim(u)) {
      throw ValidationError("state file: ket '" + ket + "' digit " + std::to_string(digit) +
                            " out of range for subsystem " + std::to_string(u) +
                            " of dimension " + std::to_string(dims.dim(u)));
    }
    labels[u - 1] = digit + 1;
  }
  return labels;
}

PureState parse_state_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ValidationError("state file: top-level value must be an object");
  }
  reject_unknown_fields(doc, {"dims", "entries", "normalize"}, "the document");
  if (!doc.contains("dims") || !doc.at("dims").is_array()) {
    throw ValidationError("state file: missing 'dims' array");
  }
  std::vector<int> dim_list;
  for (const auto& d : doc.at("dims")) {
    if (!d.is_number_integer()) {
      throw ValidationError("state file: 'dims' entries must be integers");
    }
    dim_list.push_back(d.get<int>());
  }
  const Dims dims(dim_list);
  check_file_dims(dims);

  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw ValidationError("state file: missing 'entries' array");
  }
  bool normalize = true;
  if (doc.contains("normalize")) {
    if (!doc.at("normalize").is_boolean()) {
      throw ValidationError("state file: 'normalize' must be a boolean");
    }
    normalize = doc.at("normalize").get<bool>();
  }

  std::vector<std::pair<MultiIndex, complex_t>> entries;
  for (const auto& e : doc.at("entries")) {
    if (!e.is_object()) {
      throw ValidationError("state file: entries must be objects");
    }
    reject_unknown_fields(e, {"ket", "re", "im"}, "an entry");
    if (!e.contains("ket") || !e.at("ket").is_string()) {
      throw ValidationError("state file: entry missing 'ket' string");
    }
    const MultiIndex labels = parse_ket(dims, e.at("ket").get<std::string>());
    entries.emplace_back(labels, complex_t{number_field(e, "re"), number_field(e, "im")});
  }
  if (entries.empty()) {
    throw ValidationError("degenerate state: no entries");
  }

  if (!normalize) {
    double norm2 = 0.0;
    for (const auto& [labels, value] : entries) {
      norm2 += std::norm(value);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
      throw ValidationError("state file: amplitudes are not unit norm and "
                            "'normalize' is false");
    }
  }
  return make_state(dims, entries);
}

nlohmann::json state_to_json(const PureState& state) {
  check_file_dims(state.dims());
  nlohmann::json entries = nlohmann::json::array();
  for (std::int64_t a = 1; a <= state.dims().joint_dim(); ++a) {
    const complex_t c = state.amplitude(a);
    if (c == complex_t{0.0, 0.0}) {
      continue;
    }
    entries.push_back({{"ket", ket_string(state.dims(), a)},
                       {"re", c.real()},
                       {"im", c.imag()}});
  }
  return {{"dims", state.dims().list()}, {"entries", entries}, {"normalize", true}};
}

PureState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("state file: cannot open '" + path + "'");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("state file: parse error in '" + path + "': " + e.what());
  }
  return parse_state_json(doc);
}

void write_state_file(const PureState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("state file: cannot write '" + path + "'");
  }
  out << state_to_json(state).dump(2) << "\n";
}

}  // namespace gammaq
