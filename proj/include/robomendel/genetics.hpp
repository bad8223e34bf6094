#pragma once
// Stochastic ground-truth simulator of the pea world: loci, organisms and
// cross outcomes under the competing inheritance models, plus the bad-weather
// and environmental-factor confounds. Every run owns its Rng; identical
// WorldConfig (including seed) gives byte-identical outputs.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robomendel/estimators.hpp"
#include "robomendel/infocore.hpp"
#include "robomendel/rng.hpp"

namespace robomendel::genetics {

using AllelePair = std::pair<std::string, std::string>;

// One genetic locus: an allele alphabet and a total dominance map from
// unordered allele pairs to phenotype labels.
struct Locus {
    std::string id;
    AllelePair alleles;
    std::map<AllelePair, std::string> dominance;  // keys stored sorted

    Locus(std::string id_, AllelePair alleles_,
          std::map<AllelePair, std::string> dominance_);

    const std::string& phenotype_of(const AllelePair& pair) const;
};

struct Organism {
    std::string species_id;
    std::map<std::string, AllelePair> genotype;  // locus id -> allele pair
    std::vector<double> traits;

    const AllelePair& alleles_at(const std::string& locus_id) const;
};

enum class InheritanceModel { LFLS, OneParent, Transmission };

struct WorldConfig {
    InheritanceModel inheritance_model = InheritanceModel::Transmission;
    double p_bad_weather = 0.0;
    double p_env_factor = 0.0;
    int seeds_per_cross = 30;
    std::uint64_t rng_seed = 20090131;
    int trait_dims = 4;
    // Phenotype label -> trait model on that phenotype's axis. The divergent
    // (recessive) phenotypes sit 10 standard deviations from the common ones.
    std::map<std::string, GaussianTraitModel> trait_models;
    std::vector<Locus> loci;
    // Phenotype the environmental factor flips affected plants to.
    std::string env_flip_phenotype = "Wh";

    // Pea world with the flower-color locus and one hidden recessive locus
    // (seed shape), mouse and lion founders, and unit-sd trait models.
    static WorldConfig standard_pea_world();

    const Locus& locus(const std::string& id) const;
};

// Founder organisms of the standard world.
Organism make_purple_plant(const WorldConfig& w, Rng& rng);
// Purple plant heterozygous at the hidden recessive locus.
Organism make_purple_carrier(const WorldConfig& w, Rng& rng);
Organism make_white_plant(const WorldConfig& w, Rng& rng);
Organism make_hybrid_plant(const WorldConfig& w, Rng& rng);
Organism make_mouse();
Organism make_lion();

// Flower-color phenotype (first locus) of an organism; organisms without pea
// loci have no phenotype.
std::optional<std::string> flower_phenotype(const Organism& o, const WorldConfig& w);

// Trait vector for an organism with the given per-locus phenotype labels:
// one Gaussian draw per trait dimension; axes beyond the loci are neutral.
std::vector<double> sample_traits(const std::vector<std::string>& phenotype_labels,
                                  const WorldConfig& w, Rng& rng);

// One cross event. Bad weather (drawn once per cross) empties the result, as
// does any cross between distinct species. Otherwise seeds_per_cross
// offspring are produced under the world's inheritance model.
std::vector<Organism> cross(const Organism& mother, const Organism& father, const WorldConfig& w,
                            Rng& rng);

std::vector<Organism> self_cross(const Organism& a, const WorldConfig& w, Rng& rng);

// The standard experiment ids recognized by run_design.
const std::vector<std::string>& standard_design_ids();

// Simulated outcome of a named standard experiment: phenotype labels of the
// observable axis, tagged with offspring ids. Empty sample = no progeny.
// Deterministic given (design id, world seed).
ObservationSample run_design(const std::string& design_id, const WorldConfig& w, Rng& rng);

}  // namespace robomendel::genetics
