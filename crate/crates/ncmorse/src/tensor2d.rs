//! Two-oscillator tensor space: lifted generators, the ladder-form
//! Hamiltonian, and the per-slot Casimir elements.
//!
//! States are |n, m> with flat index n * dim2 + m. Slot-1 operators act as
//! op (x) I and slot-2 operators as I (x) op, so operators of different
//! slots commute entrywise-exactly, with no tolerance involved.

use crate::audit::{AssertionClass, IdentityChecker, IdentityReport};
use crate::error::Error;
use crate::op::{commutator, hamiltonian_term, casimir_combination, OperatorMatrix};
use crate::repr::{self, Representation};

/// Index bookkeeping for the product basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Basis2D {
    dim1: usize,
    dim2: usize,
}

impl Basis2D {
    pub fn new(dim1: usize, dim2: usize) -> Result<Self, Error> {
        if dim1 == 0 || dim2 == 0 {
            return Err(Error::InvalidParameter(
                "tensor basis needs nonzero axis dimensions".into(),
            ));
        }
        Ok(Self { dim1, dim2 })
    }

    pub fn dim1(&self) -> usize {
        self.dim1
    }

    pub fn dim2(&self) -> usize {
        self.dim2
    }

    pub fn total_dim(&self) -> usize {
        self.dim1 * self.dim2
    }

    /// Flat index of |n, m>.
    pub fn flat(&self, n: usize, m: usize) -> usize {
        debug_assert!(n < self.dim1 && m < self.dim2);
        n * self.dim2 + m
    }

    /// Inverse of [`Basis2D::flat`].
    pub fn unflat(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.total_dim());
        (index / self.dim2, index % self.dim2)
    }

    /// Flat indices whose factor indices both stay `margin` states away
    /// from their axis truncation edge.
    pub fn interior_indices(&self, margin: usize) -> Vec<usize> {
        let mut keep = Vec::new();
        for n in 0..self.dim1.saturating_sub(margin) {
            for m in 0..self.dim2.saturating_sub(margin) {
                keep.push(self.flat(n, m));
            }
        }
        keep
    }
}

/// Which tensor factor an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    One,
    Two,
}

/// Embeds a one-axis operator into the product space.
pub fn lift(op: &OperatorMatrix, slot: Slot, basis: Basis2D) -> Result<OperatorMatrix, Error> {
    let axis_dim = match slot {
        Slot::One => basis.dim1(),
        Slot::Two => basis.dim2(),
    };
    if op.dim() != axis_dim {
        return Err(Error::DimensionMismatch {
            left: op.dim(),
            right: axis_dim,
        });
    }
    let lifted = match slot {
        Slot::One => op.kron(
            &OperatorMatrix::identity("I", basis.dim2()),
            format!("{}1", op.label()),
        ),
        Slot::Two => OperatorMatrix::identity("I", basis.dim1()).kron(op, format!("{}2", op.label())),
    };
    Ok(lifted)
}

/// All six lifted generators of the two-oscillator algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator2DSet {
    pub basis: Basis2D,
    pub rep1: Representation,
    pub rep2: Representation,
    pub minus1: OperatorMatrix,
    pub plus1: OperatorMatrix,
    pub zero1: OperatorMatrix,
    pub minus2: OperatorMatrix,
    pub plus2: OperatorMatrix,
    pub zero2: OperatorMatrix,
}

impl Generator2DSet {
    pub fn minus(&self, slot: Slot) -> &OperatorMatrix {
        match slot {
            Slot::One => &self.minus1,
            Slot::Two => &self.minus2,
        }
    }

    pub fn plus(&self, slot: Slot) -> &OperatorMatrix {
        match slot {
            Slot::One => &self.plus1,
            Slot::Two => &self.plus2,
        }
    }

    pub fn zero(&self, slot: Slot) -> &OperatorMatrix {
        match slot {
            Slot::One => &self.zero1,
            Slot::Two => &self.zero2,
        }
    }

    pub fn q(&self, slot: Slot) -> f64 {
        match slot {
            Slot::One => self.rep1.q(),
            Slot::Two => self.rep2.q(),
        }
    }
}

/// Lifts each axis representation into its slot of the product basis.
pub fn build_2d_generators(rep1: &Representation, rep2: &Representation) -> Generator2DSet {
    let basis = Basis2D::new(rep1.dim(), rep2.dim()).expect("representation dims are >= 2");
    let g1 = repr::build_generators(rep1);
    let g2 = repr::build_generators(rep2);
    let lift1 = |op: &OperatorMatrix| lift(op, Slot::One, basis).expect("axis dims match");
    let lift2 = |op: &OperatorMatrix| lift(op, Slot::Two, basis).expect("axis dims match");
    Generator2DSet {
        basis,
        rep1: *rep1,
        rep2: *rep2,
        minus1: lift1(&g1.minus),
        plus1: lift1(&g1.plus),
        zero1: lift1(&g1.zero),
        minus2: lift2(&g2.minus),
        plus2: lift2(&g2.plus),
        zero2: lift2(&g2.zero),
    }
}

/// Which Hamiltonian to assemble in ladder form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianPart {
    Slot1,
    Slot2,
    Total,
}

/// Ladder-form Hamiltonian scale * (K+ K- - K0^2) per slot, or their sum.
///
/// Each slot term is diagonal in |n, m> with entries
/// scale * (C_n^2 - (n + q)^2), exactly, because K+ K- never visits the
/// truncation edge.
pub fn hamiltonian_ladder_form(
    gens: &Generator2DSet,
    part: HamiltonianPart,
    scale: f64,
) -> OperatorMatrix {
    match part {
        HamiltonianPart::Slot1 => {
            hamiltonian_term(&gens.plus1, &gens.minus1, &gens.zero1, scale, "H1")
        }
        HamiltonianPart::Slot2 => {
            hamiltonian_term(&gens.plus2, &gens.minus2, &gens.zero2, scale, "H2")
        }
        HamiltonianPart::Total => {
            let h1 = hamiltonian_term(&gens.plus1, &gens.minus1, &gens.zero1, scale, "H1");
            let h2 = hamiltonian_term(&gens.plus2, &gens.minus2, &gens.zero2, scale, "H2");
            (&h1 + &h2).with_label("H")
        }
    }
}

/// Per-slot Casimir element K0^2 - (K+ K- + K- K+)/2 in the product basis.
pub fn casimir_2d(gens: &Generator2DSet, slot: Slot) -> OperatorMatrix {
    let label = match slot {
        Slot::One => "C1",
        Slot::Two => "C2",
    };
    casimir_combination(gens.zero(slot), gens.plus(slot), gens.minus(slot), label)
}

fn slot_tag(slot: Slot) -> usize {
    match slot {
        Slot::One => 1,
        Slot::Two => 2,
    }
}

/// All nine commutators between slot-1 and slot-2 generators, which must
/// vanish entrywise with margin 0.
pub fn cross_slot_reports(
    gens: &Generator2DSet,
    checker: &IdentityChecker,
) -> Vec<IdentityReport> {
    let ops1 = [("K-1", &gens.minus1), ("K+1", &gens.plus1), ("K01", &gens.zero1)];
    let ops2 = [("K-2", &gens.minus2), ("K+2", &gens.plus2), ("K02", &gens.zero2)];
    let zero = OperatorMatrix::zeros("0", gens.basis.total_dim());
    let mut out = Vec::new();
    for (name1, a) in ops1 {
        for (name2, b) in ops2 {
            let lhs = commutator(a, b).expect("shared product basis");
            out.push(
                checker
                    .check_leading(
                        format!("[{name1}, {name2}] = 0"),
                        "tensor slot separation",
                        AssertionClass::Proven,
                        &lhs,
                        &zero,
                        0,
                    )
                    .expect("margin 0 valid"),
            );
        }
    }
    out
}

/// Per-slot bracket relations on the margin-1 per-axis interior.
pub fn slot_algebra_reports(
    gens: &Generator2DSet,
    checker: &IdentityChecker,
) -> Vec<IdentityReport> {
    let keep = gens.basis.interior_indices(1);
    let mut out = Vec::new();
    for slot in [Slot::One, Slot::Two] {
        let i = slot_tag(slot);
        let minus = gens.minus(slot);
        let plus = gens.plus(slot);
        let zero = gens.zero(slot);
        let pairs = [
            (
                format!("[K-{i}, K+{i}] = 2 K0{i}"),
                commutator(minus, plus).expect("shared basis"),
                zero.scaled_re(2.0),
            ),
            (
                format!("[K0{i}, K-{i}] = -K-{i}"),
                commutator(zero, minus).expect("shared basis"),
                minus.scaled_re(-1.0),
            ),
            (
                format!("[K0{i}, K+{i}] = +K+{i}"),
                commutator(zero, plus).expect("shared basis"),
                plus.clone(),
            ),
        ];
        for (name, lhs, rhs) in pairs {
            out.push(
                checker
                    .check_masked(
                        name,
                        "two-oscillator ladder algebra",
                        AssertionClass::Proven,
                        &lhs,
                        &rhs,
                        &keep,
                        1,
                    )
                    .expect("interior not empty"),
            );
        }
    }
    out
}

/// The total ladder Hamiltonian commutes with both number-type weights.
pub fn hamiltonian_symmetry_reports(
    gens: &Generator2DSet,
    scale: f64,
    checker: &IdentityChecker,
) -> Vec<IdentityReport> {
    let h = hamiltonian_ladder_form(gens, HamiltonianPart::Total, scale);
    let zero = OperatorMatrix::zeros("0", gens.basis.total_dim());
    [(&gens.zero1, "K01"), (&gens.zero2, "K02")]
        .into_iter()
        .map(|(k0, name)| {
            let lhs = commutator(&h, k0).expect("shared basis");
            checker
                .check_leading(
                    format!("[H, {name}] = 0"),
                    "simultaneous diagonality",
                    AssertionClass::Proven,
                    &lhs,
                    &zero,
                    0,
                )
                .expect("margin 0 valid")
        })
        .collect()
}

/// Audits the claimed bracket of the ladder Hamiltonian with each ladder
/// operator against the bracket actually produced by the generators.
///
/// The claimed form is -+scale (3 K0 K-+ + K-+ K0) (raising case with the
/// products reversed). The derivable consequence of the bracket algebra is
/// [H_i, K-i] = +scale K-i and [H_i, K+i] = -scale K+i; both families are
/// reported so the discrepancy stays visible.
pub fn h_ladder_commutator_audit(
    gens: &Generator2DSet,
    scale: f64,
    checker: &IdentityChecker,
) -> Vec<IdentityReport> {
    let keep = gens.basis.interior_indices(1);
    let mut out = Vec::new();
    for slot in [Slot::One, Slot::Two] {
        let i = slot_tag(slot);
        let h = hamiltonian_ladder_form(
            gens,
            match slot {
                Slot::One => HamiltonianPart::Slot1,
                Slot::Two => HamiltonianPart::Slot2,
            },
            scale,
        );
        let minus = gens.minus(slot);
        let plus = gens.plus(slot);
        let zero = gens.zero(slot);

        let lhs_minus = commutator(&h, minus).expect("shared basis");
        let claimed_minus = (&(zero * minus).scaled_re(3.0) + &(minus * zero)).scaled_re(-scale);
        out.push(
            checker
                .check_masked(
                    format!("claimed [H{i}, K-{i}] = -s (3 K0{i} K-{i} + K-{i} K0{i})"),
                    "claimed hamiltonian-lowering bracket",
                    AssertionClass::PaperClaimed,
                    &lhs_minus,
                    &claimed_minus,
                    &keep,
                    1,
                )
                .expect("interior not empty"),
        );
        out.push(
            checker
                .check_masked(
                    format!("derived [H{i}, K-{i}] = +s K-{i}"),
                    "ladder algebra consequence",
                    AssertionClass::Proven,
                    &lhs_minus,
                    &minus.scaled_re(scale),
                    &keep,
                    1,
                )
                .expect("interior not empty"),
        );

        let lhs_plus = commutator(&h, plus).expect("shared basis");
        let claimed_plus = (&(plus * zero).scaled_re(3.0) + &(zero * plus)).scaled_re(scale);
        out.push(
            checker
                .check_masked(
                    format!("claimed [H{i}, K+{i}] = +s (3 K+{i} K0{i} + K0{i} K+{i})"),
                    "claimed hamiltonian-raising bracket",
                    AssertionClass::PaperClaimed,
                    &lhs_plus,
                    &claimed_plus,
                    &keep,
                    1,
                )
                .expect("interior not empty"),
        );
        out.push(
            checker
                .check_masked(
                    format!("derived [H{i}, K+{i}] = -s K+{i}"),
                    "ladder algebra consequence",
                    AssertionClass::Proven,
                    &lhs_plus,
                    &plus.scaled_re(-scale),
                    &keep,
                    1,
                )
                .expect("interior not empty"),
        );
    }
    out
}

/// Casimir scalar value and centrality checks in the product basis.
pub fn casimir_reports(gens: &Generator2DSet, checker: &IdentityChecker) -> Vec<IdentityReport> {
    let keep = gens.basis.interior_indices(1);
    let total = gens.basis.total_dim();
    let zero_matrix = OperatorMatrix::zeros("0", total);
    let mut out = Vec::new();
    for slot in [Slot::One, Slot::Two] {
        let i = slot_tag(slot);
        let casimir = casimir_2d(gens, slot);
        let scalar = OperatorMatrix::identity("I", total).scaled_re(repr::casimir_scalar(gens.q(slot)));
        out.push(
            checker
                .check_masked(
                    format!("C{i} = q{i}(q{i}-1) I"),
                    "two-oscillator casimir scalar",
                    AssertionClass::Proven,
                    &casimir,
                    &scalar,
                    &keep,
                    1,
                )
                .expect("interior not empty"),
        );
        for (name, op) in [
            (format!("[C{i}, K-{i}] = 0"), gens.minus(slot)),
            (format!("[C{i}, K+{i}] = 0"), gens.plus(slot)),
        ] {
            let lhs = commutator(&casimir, op).expect("shared basis");
            out.push(
                checker
                    .check_masked(
                        name,
                        "casimir centrality",
                        AssertionClass::Proven,
                        &lhs,
                        &zero_matrix,
                        &keep,
                        1,
                    )
                    .expect("interior not empty"),
            );
        }
        // operators of the other slot commute with C_i exactly
        let other = match slot {
            Slot::One => Slot::Two,
            Slot::Two => Slot::One,
        };
        let j = slot_tag(other);
        for (name, op) in [
            (format!("[C{i}, K-{j}] = 0"), gens.minus(other)),
            (format!("[C{i}, K+{j}] = 0"), gens.plus(other)),
            (format!("[C{i}, K0{j}] = 0"), gens.zero(other)),
        ] {
            let lhs = commutator(&casimir, op).expect("shared basis");
            out.push(
                checker
                    .check_leading(
                        name,
                        "tensor slot separation",
                        AssertionClass::Proven,
                        &lhs,
                        &zero_matrix,
                        0,
                    )
                    .expect("margin 0 valid"),
            );
        }
    }
    out
}
