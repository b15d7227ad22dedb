//! The four population-update strategies behind one uniform cycle interface.
//!
//! A cycle mutates an [`EngineState`] in place. Runs terminate as soon as an
//! evaluation lands below the success threshold (the evaluation index is the
//! reported cost) or when the budget is exhausted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::{
    validate_config, Crossover, GaConfig, Individual, Population, RunRecord, Variant,
};
use crate::num::Real;
use crate::objective::{self, BudgetExhausted, EvaluationCounter};
use crate::operators::{apply_crossover, binary_tournament, mutate};

/// Everything one run carries between cycles.
#[derive(Clone, Debug)]
pub struct EngineState<T: Real> {
    pub population: Population<T>,
    pub counter: EvaluationCounter,
    best_ever: Individual<T>,
    success_at: Option<u64>,
    rng: ChaCha8Rng,
}

impl<T: Real> EngineState<T> {
    /// Cheapest raw value seen across every evaluation of this run.
    pub fn best_ever(&self) -> &Individual<T> {
        &self.best_ever
    }

    /// Evaluation index of the first success, if any.
    pub fn success_at(&self) -> Option<u64> {
        self.success_at
    }

    /// A run is finished once it succeeded or ran out of budget.
    pub fn finished(&self) -> bool {
        self.success_at.is_some() || self.counter.remaining() == 0
    }

    /// Charge one evaluation for `genes`, tracking best-ever and success.
    fn evaluate(
        &mut self,
        genes: Vec<T>,
        config: &GaConfig<T>,
    ) -> Result<Individual<T>, BudgetExhausted> {
        let (raw, fitness) = objective::evaluate(&mut self.counter, &genes)?;
        let individual = Individual {
            genes,
            raw,
            fitness,
        };
        if raw < self.best_ever.raw {
            self.best_ever = individual.clone();
        }
        if self.success_at.is_none() && raw < config.success_threshold {
            self.success_at = Some(self.counter.used());
        }
        Ok(individual)
    }

    /// Select two parents by binary tournament, recombine, mutate.
    ///
    /// Every engine takes one child per pairing so the three crossovers stay
    /// interchangeable and the per-cycle evaluation counts hold.
    fn make_child_genes(&mut self, config: &GaConfig<T>) -> Vec<T> {
        let first = binary_tournament(&self.population, &mut self.rng);
        let second = binary_tournament(&self.population, &mut self.rng);
        let parent_a = &self.population.members[first];
        let parent_b = &self.population.members[second];
        let genes = if config.crossover == Crossover::Mpx
            && T::unit_uniform(&mut self.rng) >= config.mpx_probability
        {
            // The recombination coin failed: copy the better parent.
            if parent_b.fitness > parent_a.fitness {
                parent_b.genes.clone()
            } else {
                parent_a.genes.clone()
            }
        } else {
            let mut outcome = apply_crossover(
                config.crossover,
                &parent_a.genes,
                &parent_b.genes,
                config.blx_alpha,
                1,
                &config.bounds,
                &mut self.rng,
            );
            outcome.children.swap_remove(0)
        };
        mutate(
            &genes,
            config.mutation_rate,
            config.mutation_sigma,
            &config.bounds,
            &mut self.rng,
        )
    }
}

/// Build the initial population: P individuals uniform in bounds, each
/// evaluated (charging P evaluations). Stops early on success or exhaustion.
pub fn init<T: Real>(config: &GaConfig<T>) -> EngineState<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut counter = EvaluationCounter::new(config.max_evaluations);
    let mut members = Vec::with_capacity(config.population_size);
    let mut best_ever: Option<Individual<T>> = None;
    let mut success_at = None;
    for _ in 0..config.population_size {
        let genes: Vec<T> = (0..config.chromosome_length)
            .map(|_| rng.gen_range(config.bounds.lower..config.bounds.upper))
            .collect();
        match objective::evaluate(&mut counter, &genes) {
            Ok((raw, fitness)) => {
                let individual = Individual {
                    genes,
                    raw,
                    fitness,
                };
                if best_ever.as_ref().is_none_or(|b| raw < b.raw) {
                    best_ever = Some(individual.clone());
                }
                members.push(individual);
                if success_at.is_none() && raw < config.success_threshold {
                    success_at = Some(counter.used());
                    break;
                }
            }
            Err(_) => break,
        }
    }
    EngineState {
        population: Population { members },
        counter,
        best_ever: best_ever.expect("budget covers at least one evaluation"),
        success_at,
        rng,
    }
}

/// Generational GA: P offspring fully replace the parents. No elitism.
pub fn gga_cycle<T: Real>(state: &mut EngineState<T>, config: &GaConfig<T>) {
    let mut offspring = Vec::with_capacity(config.population_size);
    for _ in 0..config.population_size {
        let genes = state.make_child_genes(config);
        match state.evaluate(genes, config) {
            Ok(child) => offspring.push(child),
            // Partial offspring are discarded; the run terminates on the
            // current best-ever.
            Err(_) => return,
        }
        if state.success_at.is_some() {
            return;
        }
    }
    state.population.members = offspring;
}

/// Steady-state (mu+1) GA: one offspring replaces the worst member.
pub fn ssga_cycle<T: Real>(state: &mut EngineState<T>, config: &GaConfig<T>) {
    let genes = state.make_child_genes(config);
    let child = match state.evaluate(genes, config) {
        Ok(child) => child,
        Err(_) => return,
    };
    if state.success_at.is_some() {
        return;
    }
    let worst = state.population.worst_index();
    state.population.members[worst] = child;
}

/// Steady-generational (mu,mu) GA: one offspring replaces a uniformly random
/// member other than the current best (ties for best keep the lowest index).
pub fn sgga_cycle<T: Real>(state: &mut EngineState<T>, config: &GaConfig<T>) {
    let genes = state.make_child_genes(config);
    let child = match state.evaluate(genes, config) {
        Ok(child) => child,
        Err(_) => return,
    };
    if state.success_at.is_some() {
        return;
    }
    let best = state.population.best_index();
    let victim = pick_victim_excluding_best(&mut state.rng, state.population.len(), best);
    state.population.members[victim] = child;
}

/// Uniform draw over all indices except `best`.
pub(crate) fn pick_victim_excluding_best<R: Rng>(rng: &mut R, size: usize, best: usize) -> usize {
    debug_assert!(size >= 2 && best < size);
    let mut victim = rng.gen_range(0..size - 1);
    if victim >= best {
        victim += 1;
    }
    victim
}

/// (mu+mu)-GA: P children are created, merged with the parents, and the top
/// P by fitness survive.
pub fn mu_plus_mu_cycle<T: Real>(state: &mut EngineState<T>, config: &GaConfig<T>) {
    let mut children = Vec::with_capacity(config.population_size);
    for _ in 0..config.population_size {
        let genes = state.make_child_genes(config);
        match state.evaluate(genes, config) {
            // Children created so far still compete with the parents below.
            Err(_) => break,
            Ok(child) => children.push(child),
        }
        if state.success_at.is_some() {
            break;
        }
    }
    let parents = std::mem::take(&mut state.population.members);
    state.population.members = merge_truncate(parents, children, config.population_size);
}

/// Keep the top `capacity` of parents plus children by fitness. Ties prefer
/// children, then lower raw objective, then the stable input order.
pub(crate) fn merge_truncate<T: Real>(
    parents: Vec<Individual<T>>,
    children: Vec<Individual<T>>,
    capacity: usize,
) -> Vec<Individual<T>> {
    let mut pool: Vec<(Individual<T>, bool)> = parents
        .into_iter()
        .map(|individual| (individual, false))
        .chain(children.into_iter().map(|individual| (individual, true)))
        .collect();
    pool.sort_by(|(a, a_child), (b, b_child)| {
        b.fitness
            .partial_cmp(&a.fitness)
            .expect("fitness is never NaN")
            .then(b_child.cmp(a_child))
            .then(a.raw.partial_cmp(&b.raw).expect("raw is never NaN"))
    });
    pool.truncate(capacity);
    pool.into_iter().map(|(individual, _)| individual).collect()
}

/// One cycle of whichever variant the config selects.
pub fn cycle<T: Real>(state: &mut EngineState<T>, config: &GaConfig<T>) {
    match config.variant {
        Variant::Gga => gga_cycle(state, config),
        Variant::Ssga => ssga_cycle(state, config),
        Variant::Sgga => sgga_cycle(state, config),
        Variant::MuPlusMu => mu_plus_mu_cycle(state, config),
    }
}

/// Run to completion: init, then cycle until success or budget exhaustion.
///
/// The returned record carries an empty `config_id` and run index 0; the
/// batch harness fills both in.
pub fn run<T: Real>(config: &GaConfig<T>) -> RunRecord<T> {
    let violations = validate_config(config);
    assert!(
        violations.is_empty(),
        "run requires a valid config: {}",
        violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    );
    let mut state = init(config);
    while !state.finished() {
        cycle(&mut state, config);
    }
    RunRecord {
        config_id: String::new(),
        run_index: 0,
        seed: config.seed,
        evaluations_used: state.counter.used(),
        success: state.success_at.is_some(),
        best_raw: state.best_ever.raw,
        best_genes: state.best_ever.genes.clone(),
    }
}
