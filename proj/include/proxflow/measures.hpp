#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proxflow/geometry.hpp"
#include "proxflow/potentials.hpp"
#include "proxflow/vec.hpp"

namespace proxflow {

// Discrete probability measure mu = sum_i m_i delta_{x_i}. Treated as an
// immutable value: dynamics produces new instances per step.
struct ParticleMeasure {
  std::vector<Vec> positions;
  std::vector<double> masses;

  int size() const { return static_cast<int>(positions.size()); }
  int dim() const { return positions.empty() ? 0 : positions.front().dim(); }

  // Throws on violated invariants: n >= 1, positive masses summing to 1
  // within 1e-12, all positions inside the domain when one is given.
  void validate(const Domain* domain = nullptr) const;

  double mass_sum() const;
  Vec center_of_mass() const;
  // max_i |x_i|: radius of the smallest centered ball containing the support.
  double support_radius() const;
};

// E(mu) = 1/2 sum_ij m_i m_j W(x_i - x_j) + sum_i m_i V(x_i); the double
// sum includes i = j.
double energy(const ParticleMeasure& mu, const Potential& W, const Potential& V,
              double t = 0.0);

// v_i = -sum_j m_j grad W(x_i - x_j) - grad V(x_i), self term included.
void velocity_field_into(const ParticleMeasure& mu, const Potential& W,
                         const Potential& V, double t, std::vector<Vec>& out);
std::vector<Vec> velocity_field(const ParticleMeasure& mu, const Potential& W,
                                const Potential& V, double t = 0.0);

// Discrete metric slope sum_i m_i |P_{x_i}(v_i)|^2.
double dissipation(const ParticleMeasure& mu, const Domain& domain, const Potential& W,
                   const Potential& V, double t = 0.0);

struct InitialSpec {
  enum class Recipe { Grid, Random, Explicit };
  Recipe recipe = Recipe::Random;
  int n = 0;                  // random: number of particles
  std::uint64_t seed = 0;     // random: RNG seed
  double radius = 0.0;        // random: restrict to the centered ball (0 = off)
  int grid_per_axis = 0;      // grid: points per axis over the sampling box
  std::vector<Vec> points;    // explicit
  std::vector<double> masses; // explicit
  std::string file;           // explicit alternative: measure CSV path
};

ParticleMeasure discretize_initial(const InitialSpec& spec, const Domain& domain);

// CSV with header x1,...,xd,mass, one particle per row.
ParticleMeasure read_measure_csv(const std::string& path);
void write_measure_csv(const std::string& path, const ParticleMeasure& mu);

}  // namespace proxflow
