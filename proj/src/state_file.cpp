#include "unpol/state_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace unpol {

using nlohmann::ordered_json;

namespace {

void write_number(std::string& out, double value) {
  if (!std::isfinite(value)) throw StateFileError("cannot serialize a non-finite number");
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

bool is_scalar(const ordered_json& j) { return !j.is_object() && !j.is_array(); }

// Arrays whose leaves are at most one level deep print on a single line.
bool is_flat(const ordered_json& j) {
  if (is_scalar(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (is_scalar(e)) continue;
    if (!e.is_array()) return false;
    for (const auto& leaf : e) {
      if (!is_scalar(leaf)) return false;
    }
  }
  return true;
}

void emit(std::string& out, const ordered_json& j, int indent);

void emit_inline(std::string& out, const ordered_json& j) {
  if (j.is_array()) {
    out += '[';
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ", ";
      first = false;
      emit_inline(out, e);
    }
    out += ']';
  } else if (j.is_number_float()) {
    write_number(out, j.get<double>());
  } else {
    out += j.dump();
  }
}

void emit(std::string& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ordered_json(key).dump() + ": ";
      emit(out, value, indent + 2);
    }
    out += "\n" + close_pad + "}";
  } else if (j.is_array() && !is_flat(j)) {
    out += "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      emit(out, e, indent + 2);
    }
    out += "\n" + close_pad + "]";
  } else {
    emit_inline(out, j);
  }
}

[[noreturn]] void fail(const std::string& what) { throw StateFileError(what); }

const ordered_json& require(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

int require_int(const ordered_json& obj, const char* key) {
  const ordered_json& v = require(obj, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double require_number(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  return j.get<double>();
}

}  // namespace

std::string canonical_json(const ordered_json& doc) {
  std::string out;
  emit(out, doc, 0);
  out += '\n';
  return out;
}

ordered_json state_to_json(const DensityOperator& rho, const std::string& label) {
  ordered_json doc;
  doc["format_version"] = kStateFormatVersion;
  doc["kind"] = "density";
  doc["n_max"] = rho.n_max();
  ordered_json blocks = ordered_json::array();
  for (const auto& b : rho.op().blocks()) {
    const Matrix& m = b.matrix();
    if (m.isZero(0.0)) continue;
    ordered_json matrix = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        matrix.push_back(ordered_json::array({m(r, c).real(), m(r, c).imag()}));
      }
    }
    ordered_json entry;
    entry["n"] = b.manifold();
    entry["matrix"] = std::move(matrix);
    blocks.push_back(std::move(entry));
  }
  doc["blocks"] = std::move(blocks);
  ordered_json meta = ordered_json::object();
  if (!label.empty()) meta["label"] = label;
  meta["truncation_deficit"] = rho.truncation_deficit();
  doc["metadata"] = std::move(meta);
  return doc;
}

std::string serialize_state(const DensityOperator& rho, const std::string& label) {
  return canonical_json(state_to_json(rho, label));
}

StateFile parse_state(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) fail("state file must be a JSON object");

  const int version = require_int(doc, "format_version");
  if (version != kStateFormatVersion) {
    fail("unsupported format_version " + std::to_string(version));
  }
  const ordered_json& kind = require(doc, "kind");
  if (!kind.is_string() || kind.get<std::string>() != "density") {
    fail("only kind \"density\" is supported");
  }
  const int n_max = require_int(doc, "n_max");
  if (n_max < 0 || n_max > kMaxFileManifold) {
    fail("n_max must be in 0.." + std::to_string(kMaxFileManifold));
  }

  std::vector<Matrix> matrices;
  matrices.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) matrices.push_back(Matrix::Zero(n + 1, n + 1));

  const ordered_json& blocks = require(doc, "blocks");
  if (!blocks.is_array()) fail("\"blocks\" must be a list");
  std::set<int> seen;
  for (const auto& entry : blocks) {
    const int n = require_int(entry, "n");
    if (n < 0 || n > n_max) fail("block n=" + std::to_string(n) + " outside 0..n_max");
    if (!seen.insert(n).second) fail("duplicate block n=" + std::to_string(n));
    const ordered_json& matrix = require(entry, "matrix");
    const auto dim = static_cast<std::size_t>(n + 1);
    if (!matrix.is_array() || matrix.size() != dim * dim) {
      fail("block n=" + std::to_string(n) + " needs " + std::to_string(dim * dim) +
           " [re, im] pairs");
    }
    Matrix& m = matrices[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      const ordered_json& pair = matrix[i];
      if (!pair.is_array() || pair.size() != 2) fail("matrix entries must be [re, im] pairs");
      const std::string where = "entry " + std::to_string(i) + " of block " + std::to_string(n);
      m(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) =
          Complex(require_number(pair[0], where), require_number(pair[1], where));
    }
  }

  std::string label;
  double deficit = 0.0;
  if (doc.contains("metadata")) {
    const ordered_json& meta = doc.at("metadata");
    if (!meta.is_object()) fail("\"metadata\" must be an object");
    if (meta.contains("label")) {
      if (!meta.at("label").is_string()) fail("label must be a string");
      label = meta.at("label").get<std::string>();
    }
    if (meta.contains("truncation_deficit")) {
      deficit = require_number(meta.at("truncation_deficit"), "truncation_deficit");
    }
  }

  std::vector<BlockOperator> ops;
  ops.reserve(matrices.size());
  for (int n = 0; n <= n_max; ++n) {
    ops.emplace_back(n, std::move(matrices[static_cast<std::size_t>(n)]));
  }
  try {
    return {DensityOperator(DirectSumOperator(std::move(ops)), deficit), std::move(label)};
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

void write_state_file(const std::filesystem::path& path, const DensityOperator& rho,
                      const std::string& label) {
  const std::string text = serialize_state(rho, label);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path.string());
  out << text;
  if (!out) fail("write failed for " + path.string());
}

}  // namespace unpol
