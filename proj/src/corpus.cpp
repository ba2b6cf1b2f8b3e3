#include "melodynet/corpus.hpp"

#include <cmath>
#include <random>

#include <json.hpp>

#include "melodynet/rng.hpp"

namespace melodynet {

namespace {

using nlohmann::ordered_json;

constexpr double kRowSumTolerance = 1e-9;

// Smallest index i with u < sum(p[0..i]); falls back to the last positive
// entry so float drift at the tail cannot select a zero-probability state.
int weighted_choice(const Eigen::VectorXd& probs, double u) {
  double cum = 0.0;
  int last_positive = 0;
  for (int i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) last_positive = i;
    cum += probs[i];
    if (u < cum) return i;
  }
  return last_positive;
}

std::string padded_index(int i) {
  std::string s = std::to_string(i);
  while (s.size() < 3) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

void validate_profile(const ArtistProfile& profile) {
  const auto n = static_cast<Eigen::Index>(profile.alphabet.size());
  if (n == 0) throw InputError("profile '" + profile.artist + "': empty alphabet");
  if (profile.transitions.rows() != n || profile.transitions.cols() != n) {
    throw InputError("profile '" + profile.artist + "': transition matrix must be " +
                     std::to_string(n) + "x" + std::to_string(n));
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    if ((profile.transitions.row(r).array() < 0.0).any()) {
      throw InputError("profile '" + profile.artist + "': negative probability in row " +
                       std::to_string(r));
    }
    const double sum = profile.transitions.row(r).sum();
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw InputError("profile '" + profile.artist + "': row " + std::to_string(r) +
                       " sums to " + std::to_string(sum) + ", expected 1");
    }
  }
  if (profile.initial.size() != 0) {
    if (profile.initial.size() != n) {
      throw InputError("profile '" + profile.artist + "': initial distribution size mismatch");
    }
    if ((profile.initial.array() < 0.0).any() ||
        std::abs(profile.initial.sum() - 1.0) > kRowSumTolerance) {
      throw InputError("profile '" + profile.artist + "': initial distribution not stochastic");
    }
  }
}

std::vector<MelodyTrack> generate_corpus(const std::vector<ArtistProfile>& profiles,
                                         int tracks_per_artist, int events_per_track,
                                         std::uint64_t seed) {
  if (tracks_per_artist < 1) throw InputError("tracks_per_artist must be >= 1");
  if (events_per_track < 1) throw InputError("events_per_track must be >= 1");
  for (const auto& p : profiles) validate_profile(p);

  std::vector<MelodyTrack> corpus;
  corpus.reserve(profiles.size() * static_cast<std::size_t>(tracks_per_artist));
  for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
    const auto& profile = profiles[pi];
    const auto n = static_cast<Eigen::Index>(profile.alphabet.size());
    Eigen::VectorXd initial = profile.initial;
    if (initial.size() == 0) initial = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));

    for (int ti = 0; ti < tracks_per_artist; ++ti) {
      std::mt19937_64 gen(derive_seed(seed, pi, static_cast<std::uint64_t>(ti)));
      MelodyTrack track;
      track.artist = profile.artist;
      track.title = profile.artist + "-" + padded_index(ti + 1);
      track.bars = (events_per_track + 7) / 8;
      track.events.reserve(events_per_track);
      int state = weighted_choice(initial, uniform_unit(gen));
      track.events.push_back(profile.alphabet[state]);
      for (int e = 1; e < events_per_track; ++e) {
        state = weighted_choice(profile.transitions.row(state), uniform_unit(gen));
        track.events.push_back(profile.alphabet[state]);
      }
      corpus.push_back(std::move(track));
    }
  }
  return corpus;
}

namespace {

NoteEvent parse_alphabet_event(const ordered_json& obj, const std::string& artist,
                               std::size_t index) {
  // Reuse the melody event schema by parsing a one-event track.
  ordered_json wrapper;
  wrapper["artist"] = artist;
  wrapper["title"] = "alphabet";
  wrapper["bars"] = 1;
  wrapper["events"] = ordered_json::array({obj});
  try {
    return parse_melody(wrapper.dump()).events.at(0);
  } catch (const ParseError& e) {
    throw InputError("profile '" + artist + "': alphabet entry " + std::to_string(index) + ": " +
                     e.what());
  }
}

ordered_json event_to_json(const NoteEvent& e) {
  MelodyTrack t;
  t.artist = "x";
  t.title = "x";
  t.bars = 1;
  t.events = {e};
  return ordered_json::parse(serialize_melody(t))["events"][0];
}

}  // namespace

std::vector<ArtistProfile> parse_profiles(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("profiles: syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("profiles") || !doc["profiles"].is_array()) {
    throw InputError("profiles: expected object with \"profiles\" array");
  }
  std::vector<ArtistProfile> profiles;
  for (const auto& pj : doc["profiles"]) {
    if (!pj.is_object() || !pj.contains("artist") || !pj["artist"].is_string()) {
      throw InputError("profiles: each profile needs a string \"artist\"");
    }
    ArtistProfile p;
    p.artist = pj["artist"].get<std::string>();
    if (!pj.contains("alphabet") || !pj["alphabet"].is_array()) {
      throw InputError("profile '" + p.artist + "': missing \"alphabet\" array");
    }
    std::size_t idx = 0;
    for (const auto& ev : pj["alphabet"]) {
      p.alphabet.push_back(parse_alphabet_event(ev, p.artist, idx++));
    }
    if (!pj.contains("transitions") || !pj["transitions"].is_array()) {
      throw InputError("profile '" + p.artist + "': missing \"transitions\" array");
    }
    const auto n = static_cast<Eigen::Index>(p.alphabet.size());
    p.transitions.resize(n, n);
    const auto& rows = pj["transitions"];
    if (static_cast<Eigen::Index>(rows.size()) != n) {
      throw InputError("profile '" + p.artist + "': transitions must have " + std::to_string(n) +
                       " rows");
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (!rows[r].is_array() || static_cast<Eigen::Index>(rows[r].size()) != n) {
        throw InputError("profile '" + p.artist + "': transitions row " + std::to_string(r) +
                         " must have " + std::to_string(n) + " entries");
      }
      for (Eigen::Index c = 0; c < n; ++c) {
        if (!rows[r][c].is_number()) {
          throw InputError("profile '" + p.artist + "': non-numeric transition probability");
        }
        p.transitions(r, c) = rows[r][c].get<double>();
      }
    }
    if (pj.contains("initial")) {
      if (!pj["initial"].is_array() || static_cast<Eigen::Index>(pj["initial"].size()) != n) {
        throw InputError("profile '" + p.artist + "': initial must have " + std::to_string(n) +
                         " entries");
      }
      p.initial.resize(n);
      for (Eigen::Index i = 0; i < n; ++i) p.initial[i] = pj["initial"][i].get<double>();
    }
    validate_profile(p);
    profiles.push_back(std::move(p));
  }
  return profiles;
}

std::string serialize_profiles(const std::vector<ArtistProfile>& profiles) {
  ordered_json doc;
  ordered_json arr = ordered_json::array();
  for (const auto& p : profiles) {
    ordered_json pj;
    pj["artist"] = p.artist;
    ordered_json alphabet = ordered_json::array();
    for (const auto& e : p.alphabet) alphabet.push_back(event_to_json(e));
    pj["alphabet"] = std::move(alphabet);
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < p.transitions.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index c = 0; c < p.transitions.cols(); ++c) row.push_back(p.transitions(r, c));
      rows.push_back(std::move(row));
    }
    pj["transitions"] = std::move(rows);
    if (p.initial.size() != 0) {
      ordered_json init = ordered_json::array();
      for (Eigen::Index i = 0; i < p.initial.size(); ++i) init.push_back(p.initial[i]);
      pj["initial"] = std::move(init);
    }
    arr.push_back(std::move(pj));
  }
  doc["profiles"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace melodynet
