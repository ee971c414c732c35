//! The heredity chain J_i = kS_{≤i} and its machine verification: per layer
//! the generation condition (J̄_i = Āē_iĀ), the radical-sandwich condition
//! (J̄_i·J(Ā)·J̄_i = 0), and projectivity of J̄_i via the ε-block
//! decomposition — together with the radical cross-check and the layer
//! dimension ledger, assembled into a quasi-heredity certificate.

use crate::algebra::CategoryAlgebra;
use crate::category::{FiniteCategory, MorId};
use crate::cocycle::Cocycle;
use crate::exactla::Subspace;
use crate::green::{self, JClassDecomposition, LocalData, OrderPolicy};
use crate::modrep::{self, ModError, ModOpts};

/// The chain of two-sided ideals J_0 = 0 ⊂ J_1 ⊂ … ⊂ J_n = A as canonical
/// subspaces, together with the cumulative morphism sets that span them.
#[derive(Clone, Debug)]
pub struct HeredityChain {
    pub layer_sets: Vec<Vec<MorId>>,
    pub spans: Vec<Subspace>,
}

impl HeredityChain {
    pub fn num_layers(&self) -> usize {
        self.spans.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spans.iter().map(|s| s.dim()).collect()
    }
}

/// Span the chain and verify strictness dimensionally:
/// dim J_i − dim J_{i−1} = |S_i|.
pub fn build_chain(alg: &CategoryAlgebra, jdec: &JClassDecomposition) -> HeredityChain {
    let n = jdec.num_classes();
    let mut layer_sets = Vec::with_capacity(n + 1);
    let mut spans = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let set = jdec.s_leq_index(i);
        let span = alg.span_of_morphisms(&set);
        assert_eq!(span.dim(), set.len(), "layer sets are linearly independent");
        layer_sets.push(set);
        spans.push(span);
    }
    HeredityChain { layer_sets, spans }
}

/// Condition (i): J_i = J_{i−1} + A·e_i′·A as exact subspaces.
pub fn check_generation(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    chain: &HeredityChain,
    i: usize,
) -> bool {
    let e_lift = alg.idempotent_lift(jdec.reps[i - 1]);
    let generated = alg.ideal_span(&[e_lift]);
    chain.spans[i - 1].sum(&generated) == chain.spans[i]
}

/// Condition (ii): s·u·t ∈ J_{i−1} for all basis s, t ∈ S_{≤i} and u in a
/// basis of J(A). Returns the first offending pair (s, t) if any.
pub fn check_radical_square(
    alg: &CategoryAlgebra,
    chain: &HeredityChain,
    i: usize,
    radical: &Subspace,
) -> (bool, Option<(MorId, MorId)>) {
    let set = &chain.layer_sets[i];
    let lower = &chain.spans[i - 1];
    for u in radical.basis_rows() {
        for &s in set {
            let su = alg.left_mul_basis_vec(s, &u);
            if su.iter().all(num::Zero::is_zero) {
                continue;
            }
            for &t in set {
                let sut = alg.right_mul_basis_vec(&su, t);
                if !lower.contains_vec(&sut) {
                    return (false, Some((s, t)));
                }
            }
        }
    }
    (true, None)
}

/// Condition (iii′): the images of k(S∘e)_i, e ∈ ε_i, sum to J_i/J_{i−1}
/// with dimensions adding up exactly (each summand is the image of a
/// projective Āē′). Returns the pass flag and the block dimension ledger.
pub fn check_projectivity(
    alg: &CategoryAlgebra,
    local: &LocalData,
    chain: &HeredityChain,
    i: usize,
) -> (bool, Vec<usize>) {
    let lower = &chain.spans[i - 1];
    let upper = &chain.spans[i];
    let quotient_dim = upper.dim() - lower.dim();
    let mut total = 0usize;
    let mut dims = Vec::new();
    let mut sum = lower.clone();
    for block in &local.blocks[i - 1] {
        let span = alg.span_of_morphisms(block);
        let with_lower = span.sum(lower);
        let image_dim = with_lower.dim() - lower.dim();
        dims.push(image_dim);
        total += image_dim;
        sum = sum.sum(&span);
    }
    let pass = total == quotient_dim && sum == *upper;
    (pass, dims)
}

/// Where the pipeline stopped, with witness data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineFailure {
    CategoryInvalid(String),
    NotSplit {
        witness: MorId,
        witness_name: String,
    },
    CocycleInvalid(String),
    GreenFailure(String),
    ModuleFailure(String),
    InstanceTooLarge(String),
}

impl PipelineFailure {
    pub fn stage(&self) -> &'static str {
        match self {
            PipelineFailure::CategoryInvalid(_) => "validate",
            PipelineFailure::NotSplit { .. } => "split",
            PipelineFailure::CocycleInvalid(_) => "validate",
            PipelineFailure::GreenFailure(_) => "green",
            PipelineFailure::ModuleFailure(_) => "modules",
            PipelineFailure::InstanceTooLarge(_) => "modules",
        }
    }

    pub fn describe(&self) -> String {
        match self {
            PipelineFailure::CategoryInvalid(m) => format!("category invalid: {}", m),
            PipelineFailure::NotSplit {
                witness,
                witness_name,
            } => format!(
                "category not split: morphism {} ({}) has no pseudo-inverse",
                witness, witness_name
            ),
            PipelineFailure::CocycleInvalid(m) => format!("cocycle invalid: {}", m),
            PipelineFailure::GreenFailure(m) => format!("Green structure failure: {}", m),
            PipelineFailure::ModuleFailure(m) => format!("module computation failure: {}", m),
            PipelineFailure::InstanceTooLarge(m) => format!("instance too large: {}", m),
        }
    }
}

/// Per-layer verification record.
#[derive(Clone, Debug)]
pub struct LayerCertificate {
    pub layer: usize,
    pub class_size: usize,
    pub quotient_dim: usize,
    pub generation: bool,
    pub radical_square: bool,
    pub radical_square_witness: Option<(MorId, MorId)>,
    pub projectivity: bool,
    pub epsilon_size: usize,
    pub block_dims: Vec<usize>,
    pub ledger_predicted: usize,
    pub ledger_ok: bool,
}

impl LayerCertificate {
    pub fn ok(&self) -> bool {
        self.generation && self.radical_square && self.projectivity && self.ledger_ok
    }
}

/// The full machine-checkable certificate.
#[derive(Clone, Debug)]
pub struct HeredityCertificate {
    pub pass: bool,
    pub failure: Option<PipelineFailure>,
    pub algebra_dim: usize,
    pub num_layers: usize,
    pub chain_dims: Vec<usize>,
    pub radical_dim: Option<usize>,
    pub radical_methods_agree: Option<bool>,
    pub radical_nilpotent: Option<bool>,
    pub ideal_structure_ok: Option<bool>,
    pub layers: Vec<LayerCertificate>,
    /// (dim Δ, dim D) pairs in Λ order — the order-invariance fingerprint.
    pub module_dims: Vec<(usize, usize)>,
}

impl HeredityCertificate {
    fn failed(failure: PipelineFailure, algebra_dim: usize) -> Self {
        HeredityCertificate {
            pass: false,
            failure: Some(failure),
            algebra_dim,
            num_layers: 0,
            chain_dims: Vec::new(),
            radical_dim: None,
            radical_methods_agree: None,
            radical_nilpotent: None,
            ideal_structure_ok: None,
            layers: Vec::new(),
            module_dims: Vec::new(),
        }
    }
}

/// Run the full verification pipeline:
/// validate → split → Green structure → algebra → radical (two methods,
/// compared) → chain → per-layer (i)/(ii)/(iii′) → layer dimension ledger.
pub fn certify(
    category: &FiniteCategory,
    cocycle: &Cocycle,
    policy: OrderPolicy,
    opts: &ModOpts,
) -> HeredityCertificate {
    let dim = category.num_morphisms();
    let report = category.validate();
    if !report.ok() {
        return HeredityCertificate::failed(
            PipelineFailure::CategoryInvalid(format!("{:?}", report.violations[0])),
            dim,
        );
    }
    let witness = match category.is_split() {
        Ok(w) => w,
        Err(s) => {
            return HeredityCertificate::failed(
                PipelineFailure::NotSplit {
                    witness: s,
                    witness_name: category.morphism_name(s).to_string(),
                },
                dim,
            )
        }
    };
    let creport = cocycle.validate(category);
    if !creport.ok() {
        return HeredityCertificate::failed(
            PipelineFailure::CocycleInvalid(format!("{:?}", creport.violations[0])),
            dim,
        );
    }
    let jdec = match green::j_decompose(category, policy) {
        Ok(j) => j,
        Err(e) => {
            return HeredityCertificate::failed(PipelineFailure::GreenFailure(e.to_string()), dim)
        }
    };
    let local = match green::local_data(category, &jdec) {
        Ok(l) => l,
        Err(e) => {
            return HeredityCertificate::failed(PipelineFailure::GreenFailure(e.to_string()), dim)
        }
    };
    let alg = CategoryAlgebra::new(category.clone(), cocycle.clone());
    let radical = alg.radical_corner_criterion(&jdec, &local);
    let radical_oracle = alg.radical_trace_form();
    let radical_methods_agree = radical == radical_oracle;
    let radical_nilpotent = alg.is_nilpotent_subspace(&radical);
    let ideal_structure_ok = green::check_ideal_structure(category, &jdec, &witness).ok();
    let chain = build_chain(&alg, &jdec);
    let family = match modrep::standard_modules(&alg, &jdec, &local, &radical, opts) {
        Ok(f) => f,
        Err(ModError::InstanceTooLarge(m)) => {
            return HeredityCertificate::failed(PipelineFailure::InstanceTooLarge(m), dim)
        }
        Err(e) => {
            return HeredityCertificate::failed(PipelineFailure::ModuleFailure(e.to_string()), dim)
        }
    };
    let n = jdec.num_classes();
    let mut layers = Vec::with_capacity(n);
    for i in 1..=n {
        let generation = check_generation(&alg, &jdec, &chain, i);
        let (radical_square, radical_square_witness) =
            check_radical_square(&alg, &chain, i, &radical);
        let (projectivity, block_dims) = check_projectivity(&alg, &local, &chain, i);
        let quotient_dim = chain.spans[i].dim() - chain.spans[i - 1].dim();
        let eps = local.epsilon[i - 1].len();
        let predicted: usize = family
            .layer_members(i - 1)
            .iter()
            .map(|&a| family.n_ir[a] * family.delta[a].dim)
            .sum::<usize>()
            * eps;
        layers.push(LayerCertificate {
            layer: i,
            class_size: jdec.classes[i - 1].len(),
            quotient_dim,
            generation,
            radical_square,
            radical_square_witness,
            projectivity,
            epsilon_size: eps,
            block_dims,
            ledger_predicted: predicted,
            ledger_ok: predicted == quotient_dim,
        });
    }
    let module_dims: Vec<(usize, usize)> = (0..family.len())
        .map(|a| (family.delta[a].dim, family.simple[a].dim))
        .collect();
    let pass = radical_methods_agree
        && radical_nilpotent
        && ideal_structure_ok
        && layers.iter().all(|l| l.ok());
    HeredityCertificate {
        pass,
        failure: None,
        algebra_dim: dim,
        num_layers: n,
        chain_dims: chain.dims(),
        radical_dim: Some(radical.dim()),
        radical_methods_agree: Some(radical_methods_agree),
        radical_nilpotent: Some(radical_nilpotent),
        ideal_structure_ok: Some(ideal_structure_ok),
        layers,
        module_dims,
    }
}
