#include "tiltcell/hecke.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "tiltcell/errors.hpp"

namespace fs = std::filesystem;

namespace tiltcell {

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(word[i]);
  }
  return s;
}

KLContext::KLContext(const AffineGroup& group, std::string cache_dir)
    : group_(group), cache_dir_(std::move(cache_dir)) {
  if (!cache_dir_.empty()) {
    std::error_code ec;
    fs::create_directories(cache_dir_, ec);
    if (ec || !fs::is_directory(cache_dir_))
      throw ConfigError("cache directory '" + cache_dir_ + "' is not usable");
  }
}

NVector KLContext::act_kl_gen(const NVector& n, int s) const {
  const AffineGroup& g = group_;
  NVector out;
  for (const auto& [x, p] : n) {
    AffineElement xs = g.mul_gen(x, s);
    if (!g.is_min_rep(xs)) continue;
    out[xs] += p;
    int shift = g.length(xs) > g.length(x) ? 1 : -1;
    out[x] += p.shifted(shift);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

const NVector* KLContext::memo_lookup(const AffineElement& x) const {
  std::shared_lock lk(mutex_);
  auto it = memo_.find(x);
  return it == memo_.end() ? nullptr : it->second.get();
}

const NVector& KLContext::memo_store(const AffineElement& x, NVector v) {
  std::unique_lock lk(mutex_);
  auto [it, inserted] = memo_.emplace(x, std::make_unique<NVector>(std::move(v)));
  (void)inserted;
  return *it->second;
}

const NVector& KLContext::kl_element(const AffineElement& x) {
  if (!group_.is_min_rep(x))
    throw InvariantError("kl_element: not a minimal coset representative");
  if (const NVector* hit = memo_lookup(x)) return *hit;
  NVector loaded;
  if (load_from_disk(x, loaded)) return memo_store(x, std::move(loaded));
  NVector v = compute(x);
  if (!cache_dir_.empty()) store_to_disk(x, v);
  return memo_store(x, std::move(v));
}

// Standard recursion: take a right descent s of x, multiply the canonical
// element at xs by H_s + v, then peel constant terms top-down. The product
// has no negative powers of v, so constant-term peeling is exactly the
// canonical correction.
NVector KLContext::compute(const AffineElement& x) {
  const AffineGroup& g = group_;
  if (g.length(x) == 0) {
    NVector e;
    e[x] = Laurent(1);
    return e;
  }
  int s = -1;
  for (int c = 0; c <= g.rank(); ++c)
    if (g.is_right_descent(x, c)) {
      s = c;
      break;
    }
  require(s >= 0, "nontrivial element without right descent");
  AffineElement xs = g.mul_gen(x, s);
  require(g.is_min_rep(xs), "descent left the minimal representatives");
  NVector p = act_kl_gen(kl_element(xs), s);
  for (;;) {
    const AffineElement* pick = nullptr;
    long long pick_len = -1;
    for (const auto& [y, poly] : p) {
      if (y == x || poly.coeff(0) == 0) continue;
      long long len = g.length(y);
      if (len > pick_len) {
        pick_len = len;
        pick = &y;
      }
    }
    if (!pick) break;
    AffineElement y = *pick;
    long long c = p[y].coeff(0);
    const NVector& ky = kl_element(y);
    for (const auto& [z, poly] : ky) {
      auto it = p.find(z);
      if (it == p.end())
        p[z] = poly.scaled(-c);
      else {
        it->second -= poly.scaled(c);
        if (it->second.is_zero()) p.erase(it);
      }
    }
  }
  auto top = p.find(x);
  require(top != p.end() && top->second == Laurent(1), "canonical element top coefficient is not 1");
  for (const auto& [y, poly] : p)
    require(y == x || poly.in_v_ideal(), "canonical element has a coefficient outside vZ[v]");
  return p;
}

std::vector<std::pair<WfRep, Laurent>> KLContext::kl_expand(NVector p) {
  const AffineGroup& g = group_;
  std::vector<std::pair<WfRep, Laurent>> out;
  while (!p.empty()) {
    const AffineElement* pick = nullptr;
    long long pick_len = -1;
    for (const auto& [y, poly] : p) {
      long long len = g.length(y);
      if (len > pick_len) {
        pick_len = len;
        pick = &y;
      }
    }
    AffineElement y = *pick;
    Laurent c = p[y];
    out.push_back({g.rep(y), c});
    const NVector& ky = kl_element(y);
    for (const auto& [z, poly] : ky) {
      auto it = p.find(z);
      Laurent sub = poly * c;
      if (it == p.end()) {
        sub = Laurent() - sub;
        if (!sub.is_zero()) p[z] = sub;
      } else {
        it->second -= sub;
        if (it->second.is_zero()) p.erase(it);
      }
    }
    require(!p.count(y), "canonical expansion did not eliminate the leading term");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.length() != b.first.length() ? a.first.length() > b.first.length()
                                                : a.first.word < b.first.word;
  });
  return out;
}

long long KLContext::mu(const AffineElement& y, const AffineElement& x) {
  const NVector& kx = kl_element(x);
  auto it = kx.find(y);
  return it == kx.end() ? 0 : it->second.coeff(1);
}

std::string KLContext::format_element(const AffineElement& x) {
  const NVector& kx = kl_element(x);
  std::vector<std::pair<WfRep, Laurent>> terms;
  for (const auto& [y, p] : kx) terms.push_back({group_.rep(y), p});
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.length() != b.first.length() ? a.first.length() > b.first.length()
                                                : a.first.word < b.first.word;
  });
  std::string s = "N[" + word_str(group_.lexmin_word(x)) + "] =";
  bool first = true;
  for (const auto& [y, p] : terms) {
    s += first ? " " : " + ";
    first = false;
    s += "N[" + word_str(y.word) + "] * (" + p.str() + ")";
  }
  return s;
}

std::string KLContext::file_key(const AffineElement& x) const {
  std::string key = word_str(group_.lexmin_word(x));
  std::replace(key.begin(), key.end(), '.', '-');
  return key;
}

std::string KLContext::file_path(const std::string& key) const {
  return (fs::path(cache_dir_) / (group_.root_system().datum.name() + "_" + key + ".klc"))
      .string();
}

std::string KLContext::serialize(const NVector& v) {
  std::vector<std::pair<WfRep, Laurent>> terms;
  for (const auto& [y, p] : v) terms.push_back({group_.rep(y), p});
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.length() != b.first.length() ? a.first.length() < b.first.length()
                                                : a.first.word < b.first.word;
  });
  std::ostringstream os;
  os << "klc 1 " << group_.root_system().datum.name() << "\n";
  for (const auto& [y, p] : terms) {
    os << word_str(y.word);
    for (const auto& [e, c] : p.terms()) os << " " << e << ":" << c;
    os << "\n";
  }
  return os.str();
}

bool KLContext::deserialize(const std::string& text, NVector& out) const {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) return false;
  if (header != "klc 1 " + group_.root_system().datum.name()) return false;
  out.clear();
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string wordtok;
    if (!(ls >> wordtok)) return false;
    std::vector<int> word;
    if (wordtok != "e") {
      std::istringstream ws(wordtok);
      std::string part;
      while (std::getline(ws, part, '.')) {
        if (part.empty()) return false;
        for (char c : part)
          if (!isdigit(static_cast<unsigned char>(c))) return false;
        int g = std::stoi(part);
        if (g > group_.rank()) return false;
        word.push_back(g);
      }
    }
    AffineElement y = group_.from_word(word);
    if (!group_.is_min_rep(y) || group_.length(y) != static_cast<long long>(word.size()))
      return false;
    Laurent p;
    std::string term;
    while (ls >> term) {
      auto colon = term.find(':');
      if (colon == std::string::npos) return false;
      try {
        int e = std::stoi(term.substr(0, colon));
        long long c = std::stoll(term.substr(colon + 1));
        p += Laurent::monomial(e, c);
      } catch (...) {
        return false;
      }
    }
    if (p.is_zero() || out.count(y)) return false;
    out[y] = p;
  }
  return !out.empty();
}

bool KLContext::load_from_disk(const AffineElement& x, NVector& out) const {
  if (cache_dir_.empty()) return false;
  std::string path = file_path(file_key(x));
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  if (deserialize(buf.str(), out)) return true;
  std::error_code ec;
  fs::remove(path, ec);  // corrupt entry: evict
  return false;
}

void KLContext::store_to_disk(const AffineElement& x, NVector& v) {
  std::string path = file_path(file_key(x));
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << serialize(v);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

std::vector<std::string> KLContext::cache_list() const {
  std::vector<std::string> files;
  if (cache_dir_.empty()) return files;
  std::string prefix = group_.root_system().datum.name() + "_";
  for (const auto& entry : fs::directory_iterator(cache_dir_)) {
    std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) == 0 && name.size() > 4 &&
        name.substr(name.size() - 4) == ".klc")
      files.push_back(name);
  }
  std::sort(files.begin(), files.end());
  return files;
}

int KLContext::cache_clear() const {
  int removed = 0;
  for (const auto& name : cache_list()) {
    std::error_code ec;
    if (fs::remove(fs::path(cache_dir_) / name, ec) && !ec) ++removed;
  }
  return removed;
}

KLContext::VerifyReport KLContext::cache_verify() {
  VerifyReport report;
  auto files = cache_list();
  if (files.empty()) return report;
  // deterministic sample: seeded by the directory contents
  size_t seed = 0;
  for (const auto& f : files) seed = seed * 1099511628211ull + std::hash<std::string>{}(f);
  std::mt19937_64 rng(seed);
  size_t want = std::max<size_t>(1, files.size() / 20);
  std::vector<size_t> idx(files.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(want);
  std::sort(idx.begin(), idx.end());

  std::string prefix = group_.root_system().datum.name() + "_";
  for (size_t i : idx) {
    const std::string& name = files[i];
    std::string key = name.substr(prefix.size(), name.size() - prefix.size() - 4);
    std::vector<int> word;
    if (key != "e") {
      std::istringstream ws(key);
      std::string part;
      bool ok = true;
      while (std::getline(ws, part, '-')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
          ok = false;
          break;
        }
        word.push_back(std::stoi(part));
      }
      if (!ok) {
        std::error_code ec;
        fs::remove(fs::path(cache_dir_) / name, ec);
        report.evicted.push_back(name);
        continue;
      }
    }
    ++report.checked;
    std::string path = (fs::path(cache_dir_) / name).string();
    std::stringstream buf;
    {
      std::ifstream in(path, std::ios::binary);
      buf << in.rdbuf();
    }
    AffineElement x = group_.from_word(word);
    bool ok = group_.is_min_rep(x) &&
              group_.length(x) == static_cast<long long>(word.size());
    if (ok) {
      NVector fresh = compute(x);
      ok = serialize(fresh) == buf.str();
    }
    if (!ok) {
      std::error_code ec;
      fs::remove(path, ec);
      report.evicted.push_back(name);
    }
  }
  return report;
}

N1Vector specialize_v1(const NVector& n) {
  N1Vector out;
  for (const auto& [x, p] : n) {
    long long c = p.eval_at_one();
    if (c != 0) out[x] = c;
  }
  return out;
}

N1Vector n1_act_gen(const AffineGroup& g, const N1Vector& n, int s) {
  N1Vector out;
  for (const auto& [x, c] : n) {
    AffineElement xs = g.mul_gen(x, s);
    if (g.is_min_rep(xs))
      out[xs] += c;
    else
      out[x] -= c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

N1Vector n1_act(const AffineGroup& g, const N1Vector& n, const AffineElement& w) {
  N1Vector cur = n;
  for (int s : g.lexmin_word(w)) cur = n1_act_gen(g, cur, s);
  return cur;
}

}  // namespace tiltcell
