// Copyright 2026 The MDM Link Prediction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdm/anon/anonymizer.h"

#include <sodium.h>

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "mdm/common/date.h"
#include "mdm/common/error.h"
#include "mdm/common/text.h"
#include "mdm/datagen/sources_io.h"
#include "mdm/datagen/tables.h"
#include "mdm/match/standardize.h"

namespace mdm::anon {

namespace fs = std::filesystem;

namespace {

constexpr int kAttempts = 2000;

bool all_alpha(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
}

bool is_street_suffix(const std::string& token) {
  for (const auto& s : datagen::street_suffixes()) {
    if (token == s.full || token == s.abbreviation) return true;
  }
  return false;
}

char random_like(char c, Rng& rng) {
  if (std::isdigit(static_cast<unsigned char>(c))) return static_cast<char>('0' + rng.below(10));
  if (std::isupper(static_cast<unsigned char>(c))) return static_cast<char>('A' + rng.below(26));
  if (std::islower(static_cast<unsigned char>(c))) return static_cast<char>('a' + rng.below(26));
  return c;
}

char different_like(char c, char avoid, Rng& rng) {
  if (!std::isalnum(static_cast<unsigned char>(c))) c = 'A';
  for (;;) {
    const char r = random_like(c, rng);
    if (r != avoid) return r;
  }
}

std::string randomize_chars(const std::string& s, Rng& rng) {
  std::string out = s;
  for (auto& c : out) c = random_like(c, rng);
  return out;
}

const std::vector<std::string>& splice_pool() {
  static const std::vector<std::string> pool = [] {
    std::vector<std::string> p;
    for (const auto& v : datagen::surnames()) p.emplace_back(v.value);
    for (const auto& v : datagen::female_given_names()) p.emplace_back(v.value);
    for (const auto& v : datagen::male_given_names()) p.emplace_back(v.value);
    return p;
  }();
  return pool;
}

// Front half of one table name joined to the back half of another.
std::string splice(const std::string& like, Rng& rng) {
  const auto& pool = splice_pool();
  const std::string& a = pool[rng.below(pool.size())];
  const std::string& b = pool[rng.below(pool.size())];
  std::string out = a.substr(0, (a.size() + 1) / 2) + b.substr(b.size() / 2);
  if (!like.empty() && std::islower(static_cast<unsigned char>(like[0]))) out = text::to_lower(out);
  return out;
}

std::string tokenwise(const std::string& value, bool keep_suffixes, Rng& rng) {
  std::vector<std::string> out;
  for (const auto& token : text::split(value, ' ')) {
    if (keep_suffixes && is_street_suffix(token)) out.push_back(token);
    else if (all_alpha(token)) out.push_back(splice(token, rng));
    else out.push_back(randomize_chars(token, rng));
  }
  return text::join(out, " ");
}

// The kind of single edit turning u into v (d(u, v) == 1), applied to p at
// the aligned position or, when aligned is false, at a random one.
std::string replay_edit(const std::string& u, const std::string& v, const std::string& p, bool aligned, Rng& rng) {
  std::size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  std::string out = p;
  const char like = i < v.size() && std::isalnum(static_cast<unsigned char>(v[i])) ? v[i]
                    : i < u.size() && std::isalnum(static_cast<unsigned char>(u[i])) ? u[i]
                                                                                      : 'A';
  if (v.size() == u.size()) {
    if (out.empty()) return out;
    const std::size_t j = aligned ? std::min(i, out.size() - 1) : rng.below(out.size());
    out[j] = different_like(like, out[j], rng);
  } else if (v.size() == u.size() + 1) {
    const std::size_t j = aligned ? std::min(i, out.size()) : rng.below(out.size() + 1);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(j), random_like(like, rng));
  } else {
    if (out.empty()) return out;
    const std::size_t j = aligned ? std::min(i, out.size() - 1) : rng.below(out.size());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return out;
}

// A word whose Soundex code is exactly `code`: coded consonants separated by
// vowels, then a short tail that cannot change the code.
std::string code_word(const std::string& code, Rng& rng) {
  static const char* const kGroups[] = {"", "BFPV", "CGJKQSXZ", "DT", "L", "MN", "R"};
  static const std::string kVowels = "AEIOUY";
  std::string w(1, code[0]);
  std::size_t digits = 0;
  for (std::size_t i = 1; i < 4 && code[i] != '0'; ++i, ++digits) {
    const std::string group = kGroups[code[i] - '0'];
    w += kVowels[rng.below(kVowels.size())];
    w += group[rng.below(group.size())];
  }
  const std::size_t tail = rng.below(3) + (digits == 0 ? 1 : 0);
  for (std::size_t k = 0; k < tail; ++k) {
    w += digits == 3 ? static_cast<char>('A' + rng.below(26)) : kVowels[rng.below(kVowels.size())];
  }
  return w;
}

// Strings indexed by their one-deletion neighbourhoods.
class OneEditIndex {
 public:
  void add(const std::string& v) {
    buckets_[v].push_back(v);
    for (std::size_t i = 0; i < v.size(); ++i) buckets_[v.substr(0, i) + v.substr(i + 1)].push_back(v);
  }
  // Indexed strings at edit distance exactly 1 from v.
  std::vector<std::string> within_one(const std::string& v) const {
    std::vector<std::string> out;
    auto visit = [&](const std::string& key) {
      auto it = buckets_.find(key);
      if (it == buckets_.end()) return;
      for (const auto& w : it->second) {
        if (w != v && text::edit_distance(w, v) == 1) out.push_back(w);
      }
    };
    visit(v);
    for (std::size_t i = 0; i < v.size(); ++i) visit(v.substr(0, i) + v.substr(i + 1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::unordered_map<std::string, std::vector<std::string>> buckets_;
};

std::optional<std::int64_t> leading_date(const std::string& value) {
  if (value.size() < 10) return std::nullopt;
  return date::parse(value.substr(0, 10));
}

void ensure_sodium() {
  if (sodium_init() < 0) throw Error(ErrorCode::kIoError, "libsodium failed to initialise");
}

std::string to_hex(const unsigned char* data, std::size_t n) {
  std::string out(n * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), data, n);
  out.pop_back();
  return out;
}

std::vector<unsigned char> from_hex(const std::string& hex) {
  std::vector<unsigned char> out(hex.size() / 2);
  std::size_t len = 0;
  if (sodium_hex2bin(out.data(), out.size(), hex.data(), hex.size(), nullptr, &len, nullptr) != 0)
    throw Error(ErrorCode::kSchemaMismatch, "shift map: bad hex field");
  out.resize(len);
  return out;
}

std::vector<unsigned char> derive_key(const std::string& passphrase, const unsigned char* salt) {
  std::vector<unsigned char> key(crypto_secretbox_KEYBYTES);
  if (crypto_pwhash(key.data(), key.size(), passphrase.data(), passphrase.size(), salt,
                    crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE,
                    crypto_pwhash_ALG_ARGON2ID13) != 0)
    throw Error(ErrorCode::kIoError, "key derivation ran out of memory");
  return key;
}

}  // namespace

const char* class_name(AttributeClass c) {
  switch (c) {
    case AttributeClass::kName:
      return "name";
    case AttributeClass::kAddress:
      return "address";
    case AttributeClass::kPhone:
      return "phone";
    case AttributeClass::kId:
      return "id";
    case AttributeClass::kDate:
      return "date";
  }
  return "?";
}

AttributeClass parse_class(const std::string& name) {
  for (auto c : {AttributeClass::kName, AttributeClass::kAddress, AttributeClass::kPhone, AttributeClass::kId,
                 AttributeClass::kDate}) {
    if (name == class_name(c)) return c;
  }
  throw Error(ErrorCode::kConfigError, "unknown attribute class '" + name + "'");
}

AnonymizerSchema AnonymizerSchema::defaults() {
  AnonymizerSchema s;
  s.classes = {{"given_name", AttributeClass::kName}, {"surname", AttributeClass::kName},
               {"employer", AttributeClass::kName},   {"street", AttributeClass::kAddress},
               {"city", AttributeClass::kAddress},    {"zip", AttributeClass::kAddress},
               {"phone", AttributeClass::kPhone},     {"ssn", AttributeClass::kId},
               {"email", AttributeClass::kId},        {"dob", AttributeClass::kDate},
               {"employment_start", AttributeClass::kDate}, {"last_updated", AttributeClass::kDate}};
  for (const auto& [name, c] : s.classes) s.sensitive.insert(name);
  return s;
}

void AnonymizerSchema::validate() const {
  for (const auto& name : sensitive) {
    if (!classes.count(name))
      throw Error(ErrorCode::kUnclassedSensitiveAttribute, "sensitive attribute '" + name + "' has no class");
  }
}

const AttributeClass* AnonymizerSchema::class_of(const std::string& attribute) const {
  auto it = classes.find(attribute);
  return it == classes.end() ? nullptr : &it->second;
}

Json shiftmap_to_json(const ShiftMap& m) {
  Json values = Json::object();
  for (const auto& [c, map] : m.values) values[class_name(c)] = map;
  return {{"values", values}, {"date_offsets", m.date_offsets}, {"date_overrides", m.date_overrides}};
}

ShiftMap shiftmap_from_json(const Json& j) {
  try {
    ShiftMap m;
    for (const auto& [c, map] : j.at("values").items())
      m.values[parse_class(c)] = map.get<std::map<std::string, std::string>>();
    m.date_offsets = j.at("date_offsets").get<std::map<std::string, int>>();
    m.date_overrides = j.at("date_overrides").get<std::map<std::string, std::map<std::string, std::string>>>();
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("shift map: ") + e.what());
  }
}

void save_shiftmap(const ShiftMap& m, const fs::path& path, const std::string& passphrase) {
  if (passphrase.empty()) throw Error(ErrorCode::kConfigError, "shift map passphrase is empty");
  ensure_sodium();
  const std::string plain = shiftmap_to_json(m).dump();
  unsigned char salt[crypto_pwhash_SALTBYTES];
  unsigned char nonce[crypto_secretbox_NONCEBYTES];
  randombytes_buf(salt, sizeof salt);
  randombytes_buf(nonce, sizeof nonce);
  const auto key = derive_key(passphrase, salt);
  std::vector<unsigned char> cipher(plain.size() + crypto_secretbox_MACBYTES);
  crypto_secretbox_easy(cipher.data(), reinterpret_cast<const unsigned char*>(plain.data()), plain.size(), nonce,
                        key.data());
  Json j = {{"format", "mdm-shiftmap-1"},
            {"kdf", "argon2id13"},
            {"salt", to_hex(salt, sizeof salt)},
            {"nonce", to_hex(nonce, sizeof nonce)},
            {"ciphertext", to_hex(cipher.data(), cipher.size())}};
  write_file(path, j.dump() + "\n");
}

ShiftMap load_shiftmap(const fs::path& path, const std::string& passphrase) {
  ensure_sodium();
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSchemaMismatch, path.string() + ": " + e.what());
  }
  std::vector<unsigned char> salt, nonce, cipher;
  try {
    if (j.at("format") != "mdm-shiftmap-1") throw Error(ErrorCode::kSchemaMismatch, "unknown shift map format");
    salt = from_hex(j.at("salt").get<std::string>());
    nonce = from_hex(j.at("nonce").get<std::string>());
    cipher = from_hex(j.at("ciphertext").get<std::string>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("shift map: ") + e.what());
  }
  if (salt.size() != crypto_pwhash_SALTBYTES || nonce.size() != crypto_secretbox_NONCEBYTES ||
      cipher.size() < crypto_secretbox_MACBYTES)
    throw Error(ErrorCode::kSchemaMismatch, "shift map: truncated fields");
  const auto key = derive_key(passphrase, salt.data());
  std::string plain(cipher.size() - crypto_secretbox_MACBYTES, '\0');
  if (crypto_secretbox_open_easy(reinterpret_cast<unsigned char*>(plain.data()), cipher.data(), cipher.size(),
                                 nonce.data(), key.data()) != 0)
    throw Error(ErrorCode::kConfigError, "shift map cannot be decrypted with this passphrase");
  return shiftmap_from_json(Json::parse(plain));
}

Anonymizer::Anonymizer(AnonymizerSchema schema, std::uint64_t seed) : schema_(std::move(schema)), seed_(seed) {
  schema_.validate();
}

void Anonymizer::forbid(const std::string& value) {
  if (value.empty()) return;
  originals_.insert(value);
  max_original_length_ = std::max(max_original_length_, value.size());
}

void Anonymizer::observe_value(AttributeClass c, const std::string& value) {
  if (assigned_) throw Error(ErrorCode::kInvalidArgument, "anonymizer already assigned");
  if (value.empty()) return;
  ++counts_[c][value];
  forbid(value);
}

void Anonymizer::observe(const std::string& entity, const graph::AttributeMap& attributes) {
  for (const auto& [name, value] : attributes) {
    const AttributeClass* c = schema_.class_of(name);
    if (c == nullptr) continue;
    observe_value(*c, value);
    if (*c == AttributeClass::kDate && !value.empty()) ++entity_dates_[entity][value];
  }
}

bool Anonymizer::contains_original(const std::string& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t longest = std::min(max_original_length_, s.size() - i);
    for (std::size_t len = 1; len <= longest; ++len) {
      if (originals_.count(s.substr(i, len))) return true;
    }
  }
  return false;
}

bool Anonymizer::acceptable(AttributeClass c, const std::string& candidate) const {
  if (candidate.empty()) return false;
  auto used = used_.find(c);
  if (used != used_.end() && used->second.count(candidate)) return false;
  return !contains_original(candidate);
}

std::string Anonymizer::fresh(AttributeClass c, const std::string& original, bool relaxed, Rng& rng) const {
  switch (c) {
    case AttributeClass::kName:
      return tokenwise(original, false, rng);
    case AttributeClass::kAddress:
      // A kept suffix can itself contain a short original; relaxed drops it.
      return tokenwise(original, !relaxed, rng);
    case AttributeClass::kId: {
      const auto at = original.find('@');
      if (at != std::string::npos) return randomize_chars(original.substr(0, at), rng) + original.substr(at);
      return randomize_chars(original, rng);
    }
    case AttributeClass::kPhone:
    case AttributeClass::kDate:
      return randomize_chars(original, rng);
  }
  return randomize_chars(original, rng);
}

void Anonymizer::assign() {
  if (assigned_) return;
  assigned_ = true;
  const Rng base(seed_);
  Rng value_rng = base.fork(1);
  Rng code_rng = base.fork(3);

  for (const auto& [c, counts] : counts_) {
    std::vector<std::pair<std::string, std::size_t>> order(counts.begin(), counts.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    auto& out = map_.values[c];
    auto& used = used_[c];
    OneEditIndex originals_index, pseudonym_index;
    std::unordered_map<std::string, std::string> original_of;
    // Soundex codes map through a letter permutation and a digit
    // permutation: phonetic equality survives, and codes one component apart
    // stay one component apart.
    std::vector<char> letters(26);
    std::vector<char> digits(6);
    for (int i = 0; i < 26; ++i) letters[i] = static_cast<char>('A' + i);
    for (int i = 0; i < 6; ++i) digits[i] = static_cast<char>('1' + i);
    code_rng.shuffle(letters);
    code_rng.shuffle(digits);
    auto target_code = [&](const std::string& v) -> std::string {
      if (c != AttributeClass::kName || !all_alpha(v)) return {};
      const std::string code = match::soundex(v);
      std::string t(1, letters[code[0] - 'A']);
      for (std::size_t i = 1; i < 4; ++i) t += code[i] == '0' ? '0' : digits[code[i] - '1'];
      return t;
    };

    for (const auto& [value, count] : order) {
      if (c == AttributeClass::kDate && leading_date(value)) continue;  // shifted per entity
      const std::string code = target_code(value);
      auto fits = [&](const std::string& candidate) {
        if (!acceptable(c, candidate)) return false;
        if (!code.empty() && match::soundex(candidate) != code) return false;
        // No one-edit relation the originals do not have.
        for (const auto& q : pseudonym_index.within_one(candidate)) {
          if (text::edit_distance(original_of.at(q), value) > 1) return false;
        }
        return true;
      };

      std::string chosen;
      const auto near = originals_index.within_one(value);
      const std::string* u = nullptr;
      for (const auto& w : near) {
        if (u == nullptr || counts.at(w) > counts.at(*u) || (counts.at(w) == counts.at(*u) && w < *u)) u = &w;
      }
      if (u != nullptr) {
        const std::string& p = out.at(*u);
        for (int attempt = 0; attempt < kAttempts && chosen.empty(); ++attempt) {
          std::string candidate = replay_edit(*u, value, p, attempt == 0, value_rng);
          if (text::edit_distance(candidate, p) == 1 && fits(candidate)) chosen = std::move(candidate);
        }
      }
      for (int attempt = 0; attempt < kAttempts && chosen.empty(); ++attempt) {
        std::string candidate = code.empty() ? fresh(c, value, attempt >= kAttempts / 2, value_rng)
                                             : code_word(code, value_rng);
        if (fits(candidate)) chosen = std::move(candidate);
      }
      if (chosen.empty())
        throw Error(ErrorCode::kExhaustedCandidates, std::string("no pseudonym found for a ") + class_name(c) + " value");
      used.insert(chosen);
      originals_index.add(value);
      pseudonym_index.add(chosen);
      original_of.emplace(chosen, value);
      out.emplace(value, std::move(chosen));
    }
  }

  Rng date_rng = base.fork(2);
  for (const auto& [entity, dates] : entity_dates_) {
    std::vector<std::pair<std::string, std::size_t>> order;
    for (const auto& [value, n] : dates)
      if (leading_date(value)) order.emplace_back(value, n);
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    if (order.empty()) continue;

    bool found = false;
    for (int attempt = 0; attempt < kAttempts && !found; ++attempt) {
      const int offset = static_cast<int>(date_rng.range(-kMaxDateOffset, kMaxDateOffset));
      if (offset == 0) continue;
      std::map<std::string, std::string> shifted, overrides;
      bool ok = true;
      for (const auto& [v, n] : order) {
        std::string out = date::format(*leading_date(v) + offset) + v.substr(10);
        for (const auto& [u, pu] : shifted) {
          if (u.size() != v.size() || text::edit_distance(u, v) != 1 || text::edit_distance(pu, out) == 1) continue;
          std::size_t i = 0;
          while (u[i] == v[i]) ++i;
          // Same digit as the original edit when that still differs, else
          // the first digit that gives a valid date.
          std::string replay = pu;
          replay[i] = v[i];
          for (char d = '0'; (replay == pu || !leading_date(replay)) && d <= '9'; ++d) replay[i] = d;
          if (replay != pu && leading_date(replay)) {
            out = replay;
            overrides[v] = out;
          }
          break;
        }
        if (contains_original(out)) {
          ok = false;
          break;
        }
        shifted[v] = out;
      }
      if (!ok) continue;
      map_.date_offsets[entity] = offset;
      if (!overrides.empty()) map_.date_overrides[entity] = std::move(overrides);
      found = true;
    }
    if (!found) throw Error(ErrorCode::kExhaustedCandidates, "no date offset found for entity " + entity);
  }
}

const std::string& Anonymizer::pseudonym(AttributeClass c, const std::string& original) const {
  auto cls = map_.values.find(c);
  if (cls != map_.values.end()) {
    auto it = cls->second.find(original);
    if (it != cls->second.end()) return it->second;
  }
  throw Error(ErrorCode::kInvalidArgument, std::string("value was not observed for class ") + class_name(c));
}

std::string Anonymizer::shift_date(const std::string& entity, const std::string& value) const {
  const auto days = leading_date(value);
  if (!days) return pseudonym(AttributeClass::kDate, value);
  if (auto o = map_.date_overrides.find(entity); o != map_.date_overrides.end()) {
    if (auto v = o->second.find(value); v != o->second.end()) return v->second;
  }
  auto it = map_.date_offsets.find(entity);
  if (it == map_.date_offsets.end())
    throw Error(ErrorCode::kInvalidArgument, "entity '" + entity + "' has no date offset");
  return date::format(*days + it->second) + value.substr(10);
}

graph::AttributeMap Anonymizer::apply(const std::string& entity, const graph::AttributeMap& attributes) const {
  if (!assigned_) throw Error(ErrorCode::kInvalidArgument, "anonymizer not assigned");
  graph::AttributeMap out;
  for (const auto& [name, value] : attributes) {
    const AttributeClass* c = schema_.class_of(name);
    if (c == nullptr || value.empty()) out[name] = value;
    else if (*c == AttributeClass::kDate) out[name] = shift_date(entity, value);
    else out[name] = pseudonym(*c, value);
  }
  return out;
}

AnonymizedGraph anonymize_graph(const graph::PropertyGraph& g, std::uint64_t seed, const AnonymizerSchema& schema) {
  Anonymizer anon(schema, seed);
  auto entity_of = [](const graph::Node& n) { return "node:" + std::to_string(n.id); };
  for (const auto& n : g.nodes()) anon.observe(entity_of(n), n.attributes);
  anon.assign();
  std::vector<graph::Node> nodes = g.nodes();
  for (auto& n : nodes) n.attributes = anon.apply(entity_of(n), n.attributes);
  return {graph::PropertyGraph::build(std::move(nodes), g.edges()), anon.shift_map()};
}

std::vector<std::string> graph_strings(const graph::PropertyGraph& g) {
  std::vector<std::string> out;
  for (const auto& n : g.nodes()) {
    out.push_back(n.key);
    for (const auto& [k, v] : n.attributes) out.push_back(v);
  }
  for (const auto& e : g.edges()) {
    out.push_back(e.relation);
    for (const auto& [k, v] : e.properties) out.push_back(v);
  }
  return out;
}

ShiftMap anonymize_sources(const fs::path& in_dir, const fs::path& out_dir,
                           const std::map<std::string, std::string>& record_entity, std::uint64_t seed,
                           const AnonymizerSchema& schema) {
  const auto records = datagen::load_sources(in_dir);
  auto relations = datagen::load_text_relations(in_dir);
  const auto columns = datagen::tabular_columns(in_dir);

  auto entity_of = [&](const std::string& record_id) {
    auto it = record_entity.find(record_id);
    return it == record_entity.end() ? "record:" + record_id : it->second;
  };
  Anonymizer anon(schema, seed);
  for (const auto& r : records) anon.observe(entity_of(r.record_id), r.attributes);
  for (const auto& [rid, rels] : relations)
    for (const auto& rel : rels)
      for (const auto& token : text::split(rel.other, ' ')) anon.observe_value(AttributeClass::kName, token);
  anon.assign();

  std::vector<datagen::SourceRecord> out = records;
  for (auto& r : out) r.attributes = anon.apply(entity_of(r.record_id), r.attributes);
  for (auto& [rid, rels] : relations) {
    for (auto& rel : rels) {
      std::vector<std::string> tokens;
      for (const auto& token : text::split(rel.other, ' ')) tokens.push_back(anon.pseudonym(AttributeClass::kName, token));
      rel.other = text::join(tokens, " ");
    }
  }
  datagen::write_sources(out, relations, columns, out_dir);

  std::vector<Json> truth;
  for_each_jsonl(in_dir / datagen::kGroundTruthFile, [&](std::size_t, const Json& row) {
    if (row.value("type", "") != "entity") truth.push_back(row);
  });
  write_jsonl(out_dir / datagen::kGroundTruthFile, truth);
  return anon.shift_map();
}

}  // namespace mdm::anon
