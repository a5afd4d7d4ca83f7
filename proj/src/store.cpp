#include <fstream>
#include <sstream>

#include "pixhash/harness.hpp"

namespace pixhash {

namespace {

std::string store_key(std::string_view image_id, std::string_view variant,
                      std::string_view algo) {
  std::string key;
  key.reserve(image_id.size() + variant.size() + algo.size() + 2);
  key.append(image_id);
  key.push_back('\t');
  key.append(variant);
  key.push_back('\t');
  key.append(algo);
  return key;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

bool HashStore::upsert(HashRecord record) {
  const std::string key = store_key(record.image_id, record.variant, record.hash.name);
  auto [it, inserted] = index_.try_emplace(key, records_.size());
  if (!inserted) {
    const HashRecord& existing = records_[it->second];
    if (existing.hash != record.hash) {
      throw FormatError("conflicting hash for (" + key + ")");
    }
    return false;
  }
  records_.push_back(std::move(record));
  return true;
}

const BitHash* HashStore::find(std::string_view image_id, std::string_view variant,
                               std::string_view algo) const {
  const auto it = index_.find(store_key(image_id, variant, algo));
  if (it == index_.end()) return nullptr;
  return &records_[it->second].hash;
}

std::vector<std::string> HashStore::algos_for_variant(std::string_view variant) const {
  std::vector<std::string> out;
  for (const auto& r : records_) {
    if (r.variant != variant) continue;
    if (std::find(out.begin(), out.end(), r.hash.name) == out.end()) {
      out.push_back(r.hash.name);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void HashStore::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << "#image_id\tvariant\talgo\tbitlen\thex\n";
  for (const auto& r : records_) {
    out << r.image_id << '\t' << r.variant << '\t' << r.hash.name << '\t' << r.hash.bit_length
        << '\t' << r.hash.to_hex() << '\n';
  }
}

HashStore HashStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot read " + path.string());
  HashStore store;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 5) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) +
                        ": expected 5 tab-separated fields");
    }
    int bits = 0;
    try {
      bits = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) + ": bad bit length");
    }
    if (bits < 1) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) + ": bad bit length");
    }
    const Algo algo = is_builtin_algo_name(fields[2]) ? algo_from_name(fields[2]) : Algo::external;
    if (algo != Algo::external && bits != declared_bits(algo)) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) + ": " + fields[2] +
                        " must be " + std::to_string(declared_bits(algo)) + " bits");
    }
    HashRecord rec;
    rec.image_id = fields[0];
    rec.variant = fields[1];
    rec.hash = BitHash::from_hex(algo, fields[2], bits, fields[4]);
    store.upsert(std::move(rec));
  }
  return store;
}

std::size_t import_external_hashes(const std::filesystem::path& file, HashStore& store) {
  std::ifstream in(file);
  if (!in) throw UnreadablePath("cannot read " + file.string());

  // Tag-wise declared lengths must be consistent, both inside the file and
  // against records already in the store.
  std::map<std::string, int> tag_bits;
  for (const auto& r : store.records()) tag_bits.emplace(r.hash.name, r.hash.bit_length);

  std::size_t imported = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    {
      std::istringstream ss(line);
      std::string f;
      while (std::getline(ss, f, '\t')) fields.push_back(f);
    }
    if (fields.size() != 5) {
      throw FormatError(file.string() + ":" + std::to_string(lineno) +
                        ": expected image_id, variant, algo, bitlen, hex");
    }
    if (is_builtin_algo_name(fields[2])) {
      throw FormatError(file.string() + ":" + std::to_string(lineno) + ": tag '" + fields[2] +
                        "' collides with a built-in algorithm");
    }
    int bits = 0;
    try {
      bits = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw FormatError(file.string() + ":" + std::to_string(lineno) + ": bad bit length");
    }
    if (bits < 1) {
      throw FormatError(file.string() + ":" + std::to_string(lineno) + ": bad bit length");
    }
    const auto [it, first] = tag_bits.try_emplace(fields[2], bits);
    if (!first && it->second != bits) {
      throw LengthInconsistency("tag '" + fields[2] + "' declared as both " +
                                std::to_string(it->second) + " and " + std::to_string(bits) +
                                " bits");
    }
    HashRecord rec;
    rec.image_id = fields[0];
    rec.variant = fields[1];
    rec.hash = BitHash::from_hex(Algo::external, fields[2], bits, fields[4]);
    if (store.upsert(std::move(rec))) ++imported;
  }
  return imported;
}

}  // namespace pixhash
