#include "cstarframes/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace csf {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Parse, strfmt("field '%s': %s", path.c_str(), what.c_str()));
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) parse_fail(path, "expected a number");
  return j.get<double>();
}

std::size_t as_size(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) parse_fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  return j;
}

cplx parse_complex(const json& j, const std::string& path) {
  const json& arr = as_array(j, path);
  if (arr.size() != 2) parse_fail(path, "complex number must be [re, im]");
  return cplx(as_number(arr[0], path + "[0]"), as_number(arr[1], path + "[1]"));
}

AlgebraElement parse_element(const json& j, const AlgebraShape& shape, const std::string& path) {
  const json& arr = as_array(j, path);
  if (arr.size() != shape.block_count()) {
    parse_fail(path, strfmt("expected %zu blocks, got %zu", shape.block_count(), arr.size()));
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(shape.block_count());
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    std::string bpath = strfmt("%s[%zu]", path.c_str(), i);
    const json& flat = as_array(arr[i], bpath);
    if (flat.size() != n * n) {
      parse_fail(bpath, strfmt("block of dimension %zu needs %zu entries, got %zu", n, n * n,
                               flat.size()));
    }
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = parse_complex(flat[r * n + c], strfmt("%s[%zu]", bpath.c_str(), r * n + c));
    blocks.push_back(std::move(m));
  }
  return AlgebraElement(shape, std::move(blocks));
}

ModuleVector parse_vector(const json& j, const AlgebraShape& shape, std::size_t rank,
                          const std::string& path) {
  const json& arr = as_array(j, path);
  if (arr.size() != rank) {
    parse_fail(path, strfmt("expected rank %zu entries, got %zu", rank, arr.size()));
  }
  std::vector<AlgebraElement> entries;
  entries.reserve(rank);
  for (std::size_t q = 0; q < rank; ++q) {
    entries.push_back(parse_element(arr[q], shape, strfmt("%s[%zu]", path.c_str(), q)));
  }
  return ModuleVector(shape, std::move(entries));
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json element_to_json(const AlgebraElement& e) {
  json blocks = json::array();
  for (std::size_t i = 0; i < e.block_count(); ++i) {
    const ComplexMatrix& m = e.block(i);
    json flat = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) flat.push_back(complex_to_json(m(r, c)));
    blocks.push_back(std::move(flat));
  }
  return blocks;
}

json vector_to_json(const ModuleVector& v) {
  json entries = json::array();
  for (std::size_t q = 0; q < v.rank(); ++q) entries.push_back(element_to_json(v.entry(q)));
  return entries;
}

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

MeasureSpace MeasureDescriptor::build(std::optional<std::size_t> m_override) const {
  if (kind == MeasureSpace::Kind::Atomic) {
    return MeasureSpace::atomic(nodes, weights);
  }
  return MeasureSpace::interval(a, b, rule, m_override.value_or(m));
}

double FrameSpec::default_tol() const {
  auto it = tolerances.find("default");
  return it == tolerances.end() ? kDefaultTol : it->second;
}

FrameSpec parse_frame_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse,
                strfmt("line %zu: %s", line_of_offset(text, e.byte), e.what()));
  }
  if (!root.is_object()) {
    throw Error(ErrorKind::Parse, "spec root must be an object");
  }

  FrameSpec spec;

  const json& algebra = member(root, "", "algebra");
  const json& blocks = as_array(member(algebra, "algebra", "blocks"), "algebra.blocks");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    dims.push_back(as_size(blocks[i], strfmt("algebra.blocks[%zu]", i)));
  }
  try {
    spec.algebra = AlgebraShape(dims);
  } catch (const Error& e) {
    parse_fail("algebra.blocks", e.what());
  }

  spec.rank = as_size(member(root, "", "rank"), "rank");
  if (spec.rank == 0) parse_fail("rank", "must be >= 1");

  const json& measure = member(root, "", "measure");
  std::string kind = as_string(member(measure, "measure", "kind"), "measure.kind");
  if (kind == "atomic") {
    spec.measure.kind = MeasureSpace::Kind::Atomic;
    const json& nodes = as_array(member(measure, "measure", "nodes"), "measure.nodes");
    const json& weights = as_array(member(measure, "measure", "weights"), "measure.weights");
    for (std::size_t i = 0; i < nodes.size(); ++i)
      spec.measure.nodes.push_back(as_number(nodes[i], strfmt("measure.nodes[%zu]", i)));
    for (std::size_t i = 0; i < weights.size(); ++i)
      spec.measure.weights.push_back(as_number(weights[i], strfmt("measure.weights[%zu]", i)));
  } else if (kind == "interval") {
    spec.measure.kind = MeasureSpace::Kind::Interval;
    spec.measure.a = as_number(member(measure, "measure", "a"), "measure.a");
    spec.measure.b = as_number(member(measure, "measure", "b"), "measure.b");
    // rule and m are optional: gauss-legendre with m=32 unless configured
    if (auto it = measure.find("rule"); it != measure.end()) {
      try {
        spec.measure.rule = rule_from_name(as_string(*it, "measure.rule"));
      } catch (const Error& e) {
        parse_fail("measure.rule", e.what());
      }
    }
    if (auto it = measure.find("m"); it != measure.end()) {
      spec.measure.m = as_size(*it, "measure.m");
    }
  } else {
    parse_fail("measure.kind", strfmt("unknown kind '%s'", kind.c_str()));
  }

  const json& frame = member(root, "", "frame");
  std::string fkind = as_string(member(frame, "frame", "kind"), "frame.kind");
  const char* data_key = nullptr;
  if (fkind == "explicit") {
    spec.frame_kind = FrameSpec::FrameKind::Explicit;
    data_key = "samples";
  } else if (fkind == "polynomial") {
    spec.frame_kind = FrameSpec::FrameKind::Polynomial;
    data_key = "coefficients";
  } else {
    parse_fail("frame.kind", strfmt("unknown kind '%s'", fkind.c_str()));
  }
  std::string dpath = strfmt("frame.%s", data_key);
  const json& data = as_array(member(frame, "frame", data_key), dpath);
  if (data.empty()) parse_fail(dpath, "must not be empty");
  for (std::size_t i = 0; i < data.size(); ++i) {
    spec.frame_data.push_back(parse_vector(data[i], spec.algebra, spec.rank,
                                           strfmt("%s[%zu]", dpath.c_str(), i)));
  }

  if (auto it = root.find("tolerances"); it != root.end()) {
    if (!it->is_object()) parse_fail("tolerances", "expected an object");
    for (auto& [key, value] : it->items()) {
      spec.tolerances[key] = as_number(value, strfmt("tolerances.%s", key.c_str()));
    }
  }
  return spec;
}

FrameSpec load_frame_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, strfmt("cannot open spec file '%s'", path.c_str()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_frame_spec(buffer.str());
}

std::string serialize_frame_spec(const FrameSpec& spec) {
  json root;
  root["algebra"]["blocks"] = spec.algebra.block_dims();
  root["rank"] = spec.rank;
  if (spec.measure.kind == MeasureSpace::Kind::Atomic) {
    root["measure"]["kind"] = "atomic";
    root["measure"]["nodes"] = spec.measure.nodes;
    root["measure"]["weights"] = spec.measure.weights;
  } else {
    root["measure"]["kind"] = "interval";
    root["measure"]["a"] = spec.measure.a;
    root["measure"]["b"] = spec.measure.b;
    root["measure"]["rule"] = rule_name(spec.measure.rule);
    root["measure"]["m"] = spec.measure.m;
  }
  json data = json::array();
  for (const ModuleVector& v : spec.frame_data) data.push_back(vector_to_json(v));
  if (spec.frame_kind == FrameSpec::FrameKind::Explicit) {
    root["frame"]["kind"] = "explicit";
    root["frame"]["samples"] = std::move(data);
  } else {
    root["frame"]["kind"] = "polynomial";
    root["frame"]["coefficients"] = std::move(data);
  }
  if (!spec.tolerances.empty()) {
    root["tolerances"] = spec.tolerances;
  }
  return root.dump() + "\n";
}

Frame instantiate(const FrameSpec& spec, std::optional<std::size_t> quadrature_override) {
  MeasureSpace space = spec.measure.build(quadrature_override);
  std::vector<ModuleVector> samples;
  if (spec.frame_kind == FrameSpec::FrameKind::Explicit) {
    if (spec.frame_data.size() != space.size()) {
      throw Error(ErrorKind::Parse,
                  strfmt("field 'frame.samples': %zu samples for %zu measure nodes",
                         spec.frame_data.size(), space.size()));
    }
    samples = spec.frame_data;
  } else {
    samples.reserve(space.size());
    for (double node : space.nodes()) {
      // Horner evaluation of F(w) = sum_d w^d c_d.
      ModuleVector acc = spec.frame_data.back();
      for (std::size_t d = spec.frame_data.size() - 1; d-- > 0;) {
        acc = add(scale(node, acc), spec.frame_data[d]);
      }
      samples.push_back(std::move(acc));
    }
  }
  return Frame(VectorField(std::move(space), std::move(samples)));
}

std::string spec_digest(const FrameSpec& spec, std::optional<std::size_t> quadrature_override) {
  FrameSpec effective = spec;
  if (quadrature_override && effective.measure.kind == MeasureSpace::Kind::Interval) {
    effective.measure.m = *quadrature_override;
  }
  return fnv1a64_hex(serialize_frame_spec(effective));
}

std::string serialize_module_vector(const ModuleVector& v) {
  return vector_to_json(v).dump() + "\n";
}

ModuleVector parse_module_vector(const std::string& text, const AlgebraShape& shape,
                                 std::size_t rank) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, strfmt("module vector: %s", e.what()));
  }
  return parse_vector(j, shape, rank, "vector");
}

std::string serialize_module_operator(const ModuleOperator& t) {
  json rows = json::array();
  for (std::size_t q = 0; q < t.rank(); ++q) {
    json row = json::array();
    for (std::size_t p = 0; p < t.rank(); ++p) row.push_back(element_to_json(t.coeff(q, p)));
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

ModuleOperator parse_module_operator(const std::string& text, const AlgebraShape& shape,
                                     std::size_t rank) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, strfmt("module operator: %s", e.what()));
  }
  const json& rows = as_array(j, "operator");
  if (rows.size() != rank) {
    parse_fail("operator", strfmt("expected %zu coefficient rows, got %zu", rank, rows.size()));
  }
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(rank * rank);
  for (std::size_t q = 0; q < rank; ++q) {
    std::string rpath = strfmt("operator[%zu]", q);
    const json& row = as_array(rows[q], rpath);
    if (row.size() != rank) {
      parse_fail(rpath, strfmt("expected %zu coefficients, got %zu", rank, row.size()));
    }
    for (std::size_t p = 0; p < rank; ++p) {
      coeffs.push_back(parse_element(row[p], shape, strfmt("%s[%zu]", rpath.c_str(), p)));
    }
  }
  return ModuleOperator(shape, rank, std::move(coeffs));
}

FrameSpec spec_from_frame(const Frame& frame) {
  if (frame.space().kind() != MeasureSpace::Kind::Atomic) {
    throw Error(ErrorKind::InvalidArgument, "only atomic frames can be described as specs");
  }
  FrameSpec spec;
  spec.algebra = frame.shape();
  spec.rank = frame.rank();
  spec.measure.kind = MeasureSpace::Kind::Atomic;
  spec.measure.nodes = frame.space().nodes();
  spec.measure.weights = frame.space().weights();
  spec.frame_kind = FrameSpec::FrameKind::Explicit;
  spec.frame_data = frame.field().values();
  return spec;
}

}  // namespace csf
