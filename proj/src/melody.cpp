#include "melodynet/melody.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include <json.hpp>

namespace melodynet {

namespace {

using nlohmann::ordered_json;

std::string event_msg(std::size_t index, const std::string& what) {
  return "event " + std::to_string(index) + ": " + what;
}

}  // namespace

Duration make_duration(std::int64_t num, std::int64_t den) {
  if (num < 1 || den < 1) {
    throw InputError("duration must have numerator >= 1 and denominator >= 1, got " +
                     std::to_string(num) + "-" + std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  return Duration{num / g, den / g};
}

std::string duration_string(const Duration& d) {
  return std::to_string(d.num) + "-" + std::to_string(d.den);
}

bool valid_pitch(std::string_view token) {
  if (token.empty() || token.size() > 2) return false;
  if (token[0] < 'A' || token[0] > 'G') return false;
  if (token.size() == 2 && token[1] != '#' && token[1] != 'b') return false;
  return true;
}

bool chord_member_less(const ChordMember& a, const ChordMember& b) {
  if (a.octave != b.octave) return a.octave < b.octave;
  return a.pitch < b.pitch;
}

NoteEvent make_note(std::string pitch, int octave, std::int64_t num, std::int64_t den) {
  if (!valid_pitch(pitch)) throw InputError("invalid pitch token '" + pitch + "'");
  NoteEvent e;
  e.kind = NoteKind::Note;
  e.pitch = std::move(pitch);
  e.octave = octave;
  e.duration = make_duration(num, den);
  return e;
}

NoteEvent make_rest(std::int64_t num, std::int64_t den) {
  NoteEvent e;
  e.kind = NoteKind::Rest;
  e.duration = make_duration(num, den);
  return e;
}

NoteEvent make_chord(std::vector<ChordMember> members, std::int64_t num, std::int64_t den) {
  if (members.size() < 2) throw InputError("chord needs at least 2 members");
  for (const auto& m : members) {
    if (!valid_pitch(m.pitch)) throw InputError("invalid pitch token '" + m.pitch + "'");
  }
  std::sort(members.begin(), members.end(), chord_member_less);
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i] == members[i - 1]) {
      throw InputError("duplicate chord member " + members[i].pitch + "/" +
                       std::to_string(members[i].octave));
    }
  }
  NoteEvent e;
  e.kind = NoteKind::Chord;
  e.members = std::move(members);
  e.duration = make_duration(num, den);
  return e;
}

std::string canonical_label(const NoteEvent& event) {
  switch (event.kind) {
    case NoteKind::Note:
      return event.pitch + "/" + std::to_string(event.octave) + "/" +
             duration_string(event.duration);
    case NoteKind::Rest:
      return "rest/" + duration_string(event.duration);
    case NoteKind::Chord: {
      std::string label;
      for (const auto& m : event.members) {
        if (!label.empty()) label += "+";
        label += m.pitch + "/" + std::to_string(m.octave);
      }
      return label + "/" + duration_string(event.duration);
    }
  }
  throw std::logic_error("unreachable note kind");
}

namespace {

constexpr int kOctaveMin = 0;
constexpr int kOctaveMax = 10;

Duration parse_duration_field(const ordered_json& obj, std::size_t index) {
  if (!obj.contains("duration") || !obj["duration"].is_string()) {
    throw ParseError(event_msg(index, "missing or non-string \"duration\""));
  }
  const std::string s = obj["duration"].get<std::string>();
  const auto dash = s.find('-');
  std::int64_t num = 0;
  std::int64_t den = 0;
  bool ok = dash != std::string::npos && dash > 0 && dash + 1 < s.size();
  if (ok) {
    try {
      std::size_t used = 0;
      num = std::stoll(s.substr(0, dash), &used);
      ok = used == dash;
      std::size_t used2 = 0;
      den = std::stoll(s.substr(dash + 1), &used2);
      ok = ok && used2 == s.size() - dash - 1;
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok) throw ParseError(event_msg(index, "malformed duration '" + s + "'"));
  try {
    return make_duration(num, den);
  } catch (const InputError& e) {
    throw ParseError(event_msg(index, e.what()));
  }
}

int parse_octave_field(const ordered_json& obj, std::size_t index) {
  if (!obj.contains("octave") || !obj["octave"].is_number_integer()) {
    throw ParseError(event_msg(index, "missing or non-integer \"octave\""));
  }
  const int octave = obj["octave"].get<int>();
  if (octave < kOctaveMin || octave > kOctaveMax) {
    throw ParseError(event_msg(index, "octave " + std::to_string(octave) +
                                          " outside [" + std::to_string(kOctaveMin) + ", " +
                                          std::to_string(kOctaveMax) + "]"));
  }
  return octave;
}

std::string parse_pitch_field(const ordered_json& obj, std::size_t index) {
  if (!obj.contains("pitch") || !obj["pitch"].is_string()) {
    throw ParseError(event_msg(index, "missing or non-string \"pitch\""));
  }
  const std::string pitch = obj["pitch"].get<std::string>();
  if (!valid_pitch(pitch)) {
    throw ParseError(event_msg(index, "invalid pitch token '" + pitch + "'"));
  }
  return pitch;
}

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                         std::size_t index) {
  for (const auto& item : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end()) {
      throw ParseError(event_msg(index, "unknown field \"" + item.key() + "\""));
    }
  }
}

NoteEvent parse_event(const ordered_json& obj, std::size_t index) {
  if (!obj.is_object()) throw ParseError(event_msg(index, "event is not an object"));
  if (!obj.contains("kind") || !obj["kind"].is_string()) {
    throw ParseError(event_msg(index, "missing or non-string \"kind\""));
  }
  const std::string kind = obj["kind"].get<std::string>();
  if (kind == "note") {
    reject_unknown_keys(obj, {"kind", "pitch", "octave", "duration"}, index);
    const std::string pitch = parse_pitch_field(obj, index);
    const int octave = parse_octave_field(obj, index);
    const Duration d = parse_duration_field(obj, index);
    NoteEvent e;
    e.kind = NoteKind::Note;
    e.pitch = pitch;
    e.octave = octave;
    e.duration = d;
    return e;
  }
  if (kind == "rest") {
    reject_unknown_keys(obj, {"kind", "duration"}, index);
    NoteEvent e;
    e.kind = NoteKind::Rest;
    e.duration = parse_duration_field(obj, index);
    return e;
  }
  if (kind == "chord") {
    reject_unknown_keys(obj, {"kind", "members", "duration"}, index);
    if (!obj.contains("members") || !obj["members"].is_array()) {
      throw ParseError(event_msg(index, "missing or non-array \"members\""));
    }
    std::vector<ChordMember> members;
    for (const auto& mj : obj["members"]) {
      if (!mj.is_object()) throw ParseError(event_msg(index, "chord member is not an object"));
      reject_unknown_keys(mj, {"pitch", "octave"}, index);
      ChordMember m;
      m.pitch = parse_pitch_field(mj, index);
      m.octave = parse_octave_field(mj, index);
      members.push_back(std::move(m));
    }
    const Duration d = parse_duration_field(obj, index);
    try {
      return make_chord(std::move(members), d.num, d.den);
    } catch (const InputError& e) {
      throw ParseError(event_msg(index, e.what()));
    }
  }
  throw ParseError(event_msg(index, "unknown kind \"" + kind + "\""));
}

}  // namespace

MelodyTrack parse_melody(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based byte position of the failure
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level value is not an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "artist" && item.key() != "title" && item.key() != "bars" &&
        item.key() != "events") {
      throw ParseError("unknown top-level field \"" + item.key() + "\"");
    }
  }
  if (!doc.contains("artist") || !doc["artist"].is_string()) {
    throw ParseError("missing or non-string \"artist\"");
  }
  if (!doc.contains("title") || !doc["title"].is_string()) {
    throw ParseError("missing or non-string \"title\"");
  }
  if (!doc.contains("bars") || !doc["bars"].is_number_integer()) {
    throw ParseError("missing or non-integer \"bars\"");
  }
  if (!doc.contains("events") || !doc["events"].is_array()) {
    throw ParseError("missing or non-array \"events\"");
  }

  MelodyTrack track;
  track.artist = doc["artist"].get<std::string>();
  track.title = doc["title"].get<std::string>();
  track.bars = doc["bars"].get<int>();
  if (track.bars < 1) throw ParseError("\"bars\" must be >= 1, got " + std::to_string(track.bars));

  const auto& events = doc["events"];
  if (events.empty()) throw ParseError("\"events\" must be nonempty");
  track.events.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    track.events.push_back(parse_event(events[i], i));
  }
  return track;
}

std::string serialize_melody(const MelodyTrack& track) {
  ordered_json doc;
  doc["artist"] = track.artist;
  doc["title"] = track.title;
  doc["bars"] = track.bars;
  ordered_json events = ordered_json::array();
  for (const auto& e : track.events) {
    ordered_json obj;
    switch (e.kind) {
      case NoteKind::Note:
        obj["kind"] = "note";
        obj["pitch"] = e.pitch;
        obj["octave"] = e.octave;
        break;
      case NoteKind::Rest:
        obj["kind"] = "rest";
        break;
      case NoteKind::Chord: {
        obj["kind"] = "chord";
        ordered_json members = ordered_json::array();
        for (const auto& m : e.members) {
          members.push_back(ordered_json{{"pitch", m.pitch}, {"octave", m.octave}});
        }
        obj["members"] = std::move(members);
        break;
      }
    }
    obj["duration"] = duration_string(e.duration);
    events.push_back(std::move(obj));
  }
  doc["events"] = std::move(events);
  return doc.dump(2) + "\n";
}

}  // namespace melodynet
