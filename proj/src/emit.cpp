#include <fstream>

#include "toric/json_io.hpp"

namespace toric {

namespace {

std::string join_rationals(const QVec& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

std::string join_longs(const std::vector<long>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string records_csv(const std::vector<MldRecord>& records) {
  std::string s = "r,weights,dim,mld,witness,cartier_index,boundary,quasi_reflection,lattice_key\n";
  for (const auto& rec : records) {
    s += std::to_string(rec.spec.r);
    s += ',';
    s += join_longs(rec.spec.weights, ';');
    s += ',';
    s += std::to_string(rec.dim);
    s += ',';
    s += to_string(rec.mld);
    s += ',';
    s += join_rationals(rec.witness, ';');
    s += ',';
    s += rec.cartier_index.get_str();
    s += ',';
    s += join_rationals(rec.boundary, ';');
    s += ',';
    s += rec.quasi_reflection ? '1' : '0';
    s += ',';
    // the key contains commas; quote it
    s += '"';
    s += rec.lattice_key;
    s += '"';
    s += '\n';
  }
  return s;
}

std::string spectrum_csv(const SpectrumReport& rep) {
  std::string s = "value,multiplicity,first_r,first_weights,first_witness\n";
  for (const auto& e : rep.values) {
    s += to_string(e.value);
    s += ',';
    s += std::to_string(e.multiplicity);
    s += ',';
    s += std::to_string(e.first_spec.r);
    s += ',';
    s += join_longs(e.first_spec.weights, ';');
    s += ',';
    s += join_rationals(e.first_witness, ';');
    s += '\n';
  }
  return s;
}

}  // namespace

Json record_to_json(const MldRecord& rec) {
  Json j;
  j["r"] = rec.spec.r;
  j["weights"] = rec.spec.weights;
  j["dim"] = rec.dim;
  j["mld"] = to_string(rec.mld);
  j["witness"] = qvec_to_json(rec.witness);
  j["cartier_index"] = rec.cartier_index.get_str();
  j["boundary"] = qvec_to_json(rec.boundary);
  j["quasi_reflection"] = rec.quasi_reflection;
  j["lattice_key"] = rec.lattice_key;
  return j;
}

MldRecord record_from_json(const Json& j) {
  MldRecord rec;
  rec.spec.r = j.at("r").get<long>();
  rec.spec.weights = j.at("weights").get<std::vector<long>>();
  rec.dim = j.at("dim").get<int>();
  rec.mld = rat_from_json(j.at("mld"));
  rec.witness = qvec_from_json(j.at("witness"));
  rec.cartier_index = parse_rational(j.at("cartier_index").get<std::string>()).get_num();
  rec.boundary = qvec_from_json(j.at("boundary"));
  rec.quasi_reflection = j.at("quasi_reflection").get<bool>();
  rec.lattice_key = j.at("lattice_key").get<std::string>();
  return rec;
}

Json spectrum_to_json(const SpectrumReport& rep) {
  Json j;
  j["window"] = rep.window.str();
  j["r1"] = rep.r1;
  j["r2"] = rep.r2;
  j["stabilized"] = rep.stabilized;
  j["longest_increasing_run"] = rep.longest_increasing_run;
  Json vals = Json::array();
  for (const auto& e : rep.values) {
    Json v;
    v["value"] = to_string(e.value);
    v["multiplicity"] = e.multiplicity;
    v["first_r"] = e.first_spec.r;
    v["first_weights"] = e.first_spec.weights;
    v["first_witness"] = qvec_to_json(e.first_witness);
    vals.push_back(std::move(v));
  }
  j["values"] = std::move(vals);
  j["values_r1"] = Json::array();
  for (const auto& v : rep.values_r1) j["values_r1"].push_back(to_string(v));
  return j;
}

SpectrumReport spectrum_from_json(const Json& j) {
  SpectrumReport rep;
  rep.window = Window::parse(j.at("window").get<std::string>());
  rep.r1 = j.at("r1").get<long>();
  rep.r2 = j.at("r2").get<long>();
  rep.stabilized = j.at("stabilized").get<bool>();
  rep.longest_increasing_run = j.at("longest_increasing_run").get<long>();
  for (const auto& v : j.at("values")) {
    SpectrumEntry e;
    e.value = rat_from_json(v.at("value"));
    e.multiplicity = v.at("multiplicity").get<long>();
    e.first_spec.r = v.at("first_r").get<long>();
    e.first_spec.weights = v.at("first_weights").get<std::vector<long>>();
    e.first_witness = qvec_from_json(v.at("first_witness"));
    rep.values.push_back(std::move(e));
  }
  for (const auto& v : j.at("values_r1")) rep.values_r1.push_back(rat_from_json(v));
  return rep;
}

Json index_table_to_json(const std::vector<IndexTableRow>& rows) {
  Json j = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["window"] = row.window.str();
    r["indices"] = Json::array();
    for (const auto& x : row.indices) r["indices"].push_back(x.get_str());
    r["max_index"] = row.max_index.get_str();
    r["grew"] = row.grew;
    j.push_back(std::move(r));
  }
  return j;
}

Json accumulation_to_json(const AccumulationReport& rep) {
  Json j;
  j["resolution"] = to_string(rep.resolution);
  j["candidates"] = Json::array();
  for (const auto& c : rep.candidates) {
    Json e;
    e["limit"] = to_string(c.limit);
    e["extrapolated"] = c.extrapolated;
    e["cluster"] = Json::array();
    for (const auto& v : c.cluster) e["cluster"].push_back(to_string(v));
    e["matched"] = c.matched;
    e["match"] = c.match_description;
    j["candidates"].push_back(std::move(e));
  }
  return j;
}

Json jordan_to_json(const JordanReport& rep) {
  Json j;
  j["a_order"] = rep.a_order.get_str();
  j["a_invariant_factors"] = Json::array();
  for (const auto& d : rep.a_invariant_factors) j["a_invariant_factors"].push_back(d.get_str());
  j["index"] = rep.index.get_str();
  j["rank"] = rep.rank;
  return j;
}

void emit(const std::vector<MldRecord>& records, EmitFormat format, const std::string& path) {
  if (format == EmitFormat::csv) {
    write_file(path, records_csv(records));
    return;
  }
  Json j = Json::array();
  for (const auto& rec : records) j.push_back(record_to_json(rec));
  write_file(path, j.dump(2) + "\n");
}

void emit(const SpectrumReport& report, EmitFormat format, const std::string& path) {
  if (format == EmitFormat::csv) {
    write_file(path, spectrum_csv(report));
    return;
  }
  write_file(path, spectrum_to_json(report).dump(2) + "\n");
}

std::vector<MldRecord> read_records_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j = Json::parse(in, nullptr, true);
  std::vector<MldRecord> out;
  for (const auto& e : j) out.push_back(record_from_json(e));
  return out;
}

SpectrumReport read_spectrum_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return spectrum_from_json(Json::parse(in, nullptr, true));
}

}  // namespace toric
