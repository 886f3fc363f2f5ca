#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "relsat/bell_stats.hpp"
#include "relsat/config_file.hpp"
#include "relsat/errors.hpp"
#include "relsat/kinematics.hpp"
#include "relsat/polarization_diffusion.hpp"
#include "relsat/qft_effects.hpp"
#include "relsat/report.hpp"
#include "relsat/scenario.hpp"

using namespace relsat;

namespace {

Scenario fromText(const std::string& text) {
  return scenarioFromConfig(ConfigFile::parseString(text, "test.ini"));
}

std::string configErrorOf(const std::string& text) {
  try {
    fromText(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

double value(const EffectReport& r, const std::string& name) {
  const EffectEntry* e = r.find(name);
  if (!e) throw std::runtime_error("missing entry " + name);
  return e->value;
}

}  // namespace

TEST(ConfigFile, ParsesSectionsKeysAndComments) {
  const ConfigFile cfg = ConfigFile::parseString(
      "top = 1\n# comment\n[a]\n  key = hello world  ; trailing\nnum=2.5e3\n[b]\nflag = yes\n");
  EXPECT_EQ(*cfg.getString("", "top"), "1");
  EXPECT_EQ(*cfg.getString("a", "key"), "hello world");
  EXPECT_EQ(*cfg.getReal("a", "num"), 2.5e3);
  EXPECT_TRUE(*cfg.getBool("b", "flag"));
  EXPECT_FALSE(cfg.getReal("a", "missing").has_value());
  const ConfigEntry* e = cfg.find("a", "key");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->line, 4);
  EXPECT_EQ(e->column, 3);
  EXPECT_EQ(e->valueColumn, 9);
  EXPECT_NO_THROW(cfg.rejectUnused());
}

TEST(ConfigFile, SyntaxErrorsCarryLineAndColumn) {
  const auto message = [](const std::string& text) {
    try {
      ConfigFile::parseString(text, "f.ini");
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message("[a]\nno equals sign\n").rfind("f.ini:2:", 0), 0u);
  EXPECT_EQ(message("[a\n").rfind("f.ini:1:", 0), 0u);
  EXPECT_EQ(message("[a]\nx = 1\nx = 2\n").rfind("f.ini:3:", 0), 0u);
  EXPECT_EQ(message("[a]\n[a]\n").rfind("f.ini:2:", 0), 0u);
  EXPECT_EQ(message("[a]\n = 3\n").rfind("f.ini:2:", 0), 0u);
}

TEST(ConfigFile, TypedGetterErrors) {
  const ConfigFile cfg = ConfigFile::parseString("[s]\nx = abc\ny = 1e999\nz = maybe\nn = -3\n",
                                                 "g.ini");
  EXPECT_THROW(cfg.getReal("s", "x"), ConfigError);
  EXPECT_THROW(cfg.getReal("s", "y"), ConfigError);
  EXPECT_THROW(cfg.getBool("s", "z"), ConfigError);
  EXPECT_THROW(cfg.getUnsigned("s", "n"), ConfigError);
  try {
    cfg.getReal("s", "x");
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("g.ini:2:5:", 0), 0u) << e.what();
  }
}

TEST(Scenario, MinimalFileIsValid) {
  const Scenario s =
      fromText("[mission]\npreset = leo1000\nwavelength = 800e-9\nfibre_delay = 20e-6\n");
  EXPECT_EQ(s.preset, "leo1000");
  EXPECT_EQ(s.wavelength, 800e-9);
  EXPECT_EQ(s.fibreDelay, 20e-6);
  EXPECT_NO_THROW(s.validate());
}

TEST(Scenario, UnknownKeyIsRejectedWithPosition) {
  const std::string msg = configErrorOf("[mission]\npreset = leo1000\n  wavelenght = 1e-6\n");
  EXPECT_NE(msg.find("test.ini:3:3:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("wavelenght"), std::string::npos);
}

TEST(Scenario, UnknownSectionIsRejected) {
  const std::string msg = configErrorOf("[mission]\npreset = geo\n[missions]\nx = 1\n");
  EXPECT_NE(msg.find("test.ini:3:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("missions"), std::string::npos);
}

TEST(Scenario, ValidationNamesTheField) {
  EXPECT_NE(configErrorOf("[mission]\nwavelength = -800e-9\n").find("wavelength"),
            std::string::npos);
  EXPECT_NE(configErrorOf("[mission]\nvisibility = 1.5\n").find("visibility"), std::string::npos);
  EXPECT_NE(configErrorOf("[mission]\npreset = mars\n").find("mars"), std::string::npos);
  EXPECT_NE(configErrorOf("[mission]\nfibre_index = 0.5\n").find("fibre_index"),
            std::string::npos);
}

TEST(Scenario, AnglesInDegreesAndOrbitOverride) {
  const Scenario s = fromText(
      "[orbit]\nsemi_major_axis = 7000e3\ninclination = 90\n[wigner]\ntheta = 45\n"
      "[station_a]\nlatitude = 30\nlongitude = 10\naltitude = 0\n[effects]\nbell = false\n");
  EXPECT_NEAR(s.wigner.theta, kPi / 4, 1e-15);
  ASSERT_TRUE(s.orbit.has_value());
  EXPECT_NEAR(s.resolvedOrbit().orbit.inclination, kPi / 2, 1e-15);
  ASSERT_TRUE(s.stationA.has_value());
  EXPECT_NEAR(s.stationA->latitude, kPi / 6, 1e-15);
  EXPECT_FALSE(s.effects.bell);
  EXPECT_TRUE(s.effects.qft);
}

TEST(EffectFlags, FromList) {
  const EffectFlags none = EffectFlags::fromList("none");
  EXPECT_FALSE(none.wigner || none.gravitomagnetic || none.interferometry || none.qft ||
               none.diffusion || none.bell);
  const EffectFlags some = EffectFlags::fromList("qft, bell");
  EXPECT_TRUE(some.qft && some.bell);
  EXPECT_FALSE(some.wigner);
  EXPECT_THROW(EffectFlags::fromList("qft,unicorns"), ConfigError);
}

TEST(Report, GeometryEventsGiveInvariantSeparation) {
  Scenario s;
  s.geometry.separation = 1e6;
  s.geometry.memoryDelay = 2e-5;
  s.effects = EffectFlags::fromList("none");
  const EffectReport r = runReport(s);
  EXPECT_NEAR(value(r, "invariant_separation"), 109e3, 1e3);
  EXPECT_NEAR(value(r, "simultaneity_boost_beta"), 0.994, 1e-3);
  EXPECT_EQ(value(r, "causally_connected"), 0.0);
}

TEST(Report, ValuesEqualDirectCalls) {
  Scenario s;
  const EffectReport r = runReport(s);
  EXPECT_EQ(value(r, "timing_shift_per_distance"), timingShiftPerDistance(15e3));
  EXPECT_NEAR(value(r, "timing_shift_per_distance") * 1e3, 166e-12, 1e-12);
  EXPECT_EQ(value(r, "unruh_temperature"), unruhTemperature(9.81));
  EXPECT_EQ(value(r, "required_photons"), static_cast<double>(requiredPhotons(0.9)));
  EXPECT_EQ(value(r, "spacelike_window"), spacelikeWindow(orbitPreset("leo1000").linkRange));
  const CmbEpoch cmb;
  EXPECT_EQ(value(r, "cmb_drift_bound"), driftBound(cmb.chiBound, cmb.time, cmb.frequency));
  EXPECT_EQ(value(r, "bell_mc_seed"), 1.0);
  EXPECT_EQ(value(r, "bell_mc_pairs"), 288.0);
}

TEST(Report, Deterministic) {
  Scenario s;
  s.workers = 3;
  std::ostringstream a, b;
  writeReportCsv(a, runReport(s));
  writeReportCsv(b, runReport(s));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Report, ZeroedEffectsLeaveOnlyGeometry) {
  Scenario s;
  s.effects = EffectFlags::fromList("none");
  const EffectReport r = runReport(s);
  const std::vector<std::string> geometry = {
      "invariant_separation", "simultaneity_boost_beta", "causally_connected",
      "timing_shift_per_distance", "min_separation_for_switching", "timing_shift_over_link",
      "light_time_window", "orbital_speed", "orbital_period", "station_range"};
  for (const auto& e : r.entries) {
    EXPECT_NE(std::find(geometry.begin(), geometry.end(), e.effect), geometry.end()) << e.effect;
  }
  EXPECT_FALSE(r.entries.empty());
}

TEST(Report, GeoSpacelikeWindow) {
  Scenario s;
  s.preset = "geo";
  const EffectReport r = runReport(s);
  EXPECT_NEAR(value(r, "spacelike_window"), 0.12, 0.005);
}

TEST(Report, FixedRangePresetsSkipOrbitEntries) {
  Scenario s;
  s.preset = "au";
  s.effects = EffectFlags::fromList("none");
  const EffectReport r = runReport(s);
  EXPECT_EQ(r.find("orbital_speed"), nullptr);
  EXPECT_NEAR(value(r, "light_time_window"), 499.0, 1.0);
}

TEST(Report, NumericFailureNamesEffect) {
  Scenario s;
  s.wigner.speed = Constants::c;
  try {
    runReport(s);
    FAIL() << "expected EffectError";
  } catch (const EffectError& e) {
    EXPECT_EQ(e.effect(), "first_order_wigner_phase");
  }
}

TEST(Report, EveryEntryCarriesReference) {
  Scenario s;
  s.stationA = GroundStation{0.5, 0.2, 100.0};
  for (const auto& e : runReport(s).entries) {
    EXPECT_FALSE(e.paperRef.empty()) << e.effect;
  }
  for (const auto& name : catalogedEffects()) EXPECT_FALSE(effectReference(name).empty());
  EXPECT_TRUE(effectReference("no_such_effect").empty());
}

TEST(Report, CsvFormat) {
  EffectReport r;
  r.entries.push_back({"a", 0.1, Unit::Meter, "x, \"y\""});
  r.entries.push_back({"b", 1.0 / 3.0, Unit::Count, ""});
  std::ostringstream os;
  writeReportCsv(os, r);
  EXPECT_EQ(os.str(),
            "effect,value,unit,paper_ref\n"
            "a,0.10000000000000001,m,\"x, \"\"y\"\"\"\n"
            "b,0.33333333333333331,count,\n");
}
