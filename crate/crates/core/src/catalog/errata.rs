//! Registry of known misprints in the transcribed formulas.
//!
//! Each entry quotes the printed fragment verbatim (LaTeX) and, where the
//! intended reading can be established, lists candidate readings as text
//! edits on the catalog source. The first reading is the adopted one.
//! Entries marked `forced` concern text that does not parse as printed; their
//! adopted reading is already applied to the transcription itself.

use serde::Serialize;

use super::{Direction, GarnierName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Target {
    /// Image of one variable in transformation `r<transform>`.
    Image { transform: usize, var: &'static str },
    /// Reference Hamiltonian of the given flow.
    Hamiltonian { flow: usize },
    /// Printed coefficient of one polar monomial of the ansatz pushed
    /// through `r<transform>`.
    PoleCoefficient { transform: usize, monomial: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "check", content = "direction", rename_all = "snake_case")]
pub enum Detection {
    /// The printed text does not parse.
    Parse,
    /// The canonical relations fail for this direction of the map.
    Canonical(Direction),
    /// Forward and backward maps are not mutually inverse.
    Roundtrip,
    /// The printed Hamiltonian differs from the derived one.
    Reference,
    /// A printed pole coefficient differs from the assembled condition.
    Calibration,
}

/// Replace `from` by `to` in the source text of `target`; `from` must occur
/// exactly once there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edit {
    pub target: Target,
    pub from: &'static str,
    pub to: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Reading {
    pub label: &'static str,
    pub edits: &'static [Edit],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ErratumEntry {
    pub id: &'static str,
    pub system: GarnierName,
    pub targets: &'static [Target],
    /// Verbatim printed fragment(s).
    pub printed: &'static str,
    pub nature: &'static str,
    pub detection: &'static [Detection],
    pub forced: bool,
    pub readings: &'static [Reading],
}

impl ErratumEntry {
    pub fn adopted(&self) -> Option<&'static Reading> {
        self.readings.first()
    }

    pub fn detects(&self, d: Detection) -> bool {
        self.detection.contains(&d)
    }

    pub fn touches(&self, t: Target) -> bool {
        self.targets.contains(&t)
    }

    pub fn touches_transform(&self, index: usize) -> bool {
        self.targets
            .iter()
            .any(|t| matches!(t, Target::Image { transform, .. } if *transform == index))
    }
}

use Detection::{Calibration, Canonical, Parse, Reference, Roundtrip};
use Direction::{Backward, Forward};
use GarnierName::*;

const fn img(transform: usize, var: &'static str) -> Target {
    Target::Image { transform, var }
}

const fn ham(flow: usize) -> Target {
    Target::Hamiltonian { flow }
}

const POLE_R1: Target = Target::PoleCoefficient {
    transform: 1,
    monomial: "x1^-1*x2^2*y2",
};

const fn edit(target: Target, from: &'static str, to: &'static str) -> Edit {
    Edit { target, from, to }
}

pub static REGISTRY: &[ErratumEntry] = &[
    ErratumEntry {
        id: "G11111-H1-paren",
        system: G11111,
        targets: &[ham(1)],
        printed: r"-\alpha_{5}(t_{1}^2-t_{1}+t_{2}-t_{1}t_{2})q_{1}p_{1}",
        nature: "unbalanced parenthesis: the group opened before h(t_2-t_1) is never closed; read as the full coefficient of q1*p1",
        detection: &[Parse],
        forced: true,
        readings: &[Reading {
            label: "close the coefficient before q1*p1",
            edits: &[edit(
                ham(1),
                "- a5*(t1^2 - t1 + t2 - t1*t2)*q1*p1",
                "- a5*(t1^2 - t1 + t2 - t1*t2))*q1*p1",
            )],
        }],
    },
    ErratumEntry {
        id: "G11111-H1-a4",
        system: G11111,
        targets: &[ham(1)],
        printed: r"+\alpha_{4}t_{2}(t_{1}+1)",
        nature: "sign inside the a4 part of the q1*p1 coefficient; the derived Hamiltonian and the second Hamiltonian both have t1 - 1",
        detection: &[Reference],
        forced: false,
        readings: &[Reading {
            label: "a4*t2*(t1 - 1)",
            edits: &[edit(ham(1), "a4*t2*(t1 + 1)", "a4*t2*(t1 - 1)")],
        }],
    },
    ErratumEntry {
        id: "G11111-H2-a3",
        system: G11111,
        targets: &[ham(2)],
        printed: r"+\alpha_{3}t_{1}(t_{2}-t_{1})+\alpha_{4}t_{2}(t_{1}-t_{2})",
        nature: "the a3 part of the q2*p2 coefficient has t2 - t1 where the derived Hamiltonian has t2 - 1, matching the a4 part of the first Hamiltonian",
        detection: &[Reference],
        forced: false,
        readings: &[Reading {
            label: "a3*t1*(t2 - 1)",
            edits: &[edit(
                ham(2),
                "a3*t1*(t2 - t1) + a4*t2*(t1 - t2)",
                "a3*t1*(t2 - 1) + a4*t2*(t1 - t2)",
            )],
        }],
    },
    ErratumEntry {
        id: "G11111-r1-pole-indices",
        system: G11111,
        targets: &[POLE_R1],
        printed: r"(k_{0,2,1,0}-k_{1,1,1,0}+(h-\alpha_{1})k_{1,2,1,1}-2(h-\alpha_{1})k_{2,1,2,0})\dfrac{1}{x_{1}}x_{2}^2y_{2}",
        nature: "three unknown labels permuted; the monomials that reach x1^-1*x2^2*y2 are q2^2*p2, q1*p1*q2, q1*p1*q2^2*p2 and q1^2*p1^2*q2, with the printed coefficients",
        detection: &[Calibration],
        forced: false,
        readings: &[Reading {
            label: "labels of the assembled condition",
            edits: &[
                edit(POLE_R1, "k_{0,2,1,0}", "k_{0,0,2,1}"),
                edit(POLE_R1, "k_{1,2,1,1}", "k_{1,1,2,1}"),
                edit(POLE_R1, "k_{2,1,2,0}", "k_{2,2,1,0}"),
            ],
        }],
    },
    ErratumEntry {
        id: "G1112-r3-y1-sign",
        system: G1112,
        targets: &[img(3, "y1")],
        printed: r"y_{1}=\eta (\dfrac{1}{q_{1}})^2(q_{2}+1)",
        nature: "sign of the q2 term: the printed backward image does not invert the forward image of p1",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "minus sign in front of q2",
            edits: &[edit(img(3, "y1"), "eta*(1/q1)^2*(q2 + 1)", "eta*(1/q1)^2*(-q2 + 1)")],
        }],
    },
    ErratumEntry {
        id: "G1112-r5-y2",
        system: G1112,
        targets: &[img(5, "y2")],
        printed: r"y_{2}=-\dfrac{t_{1}}{t_{2}}{p_{2}}+p_{2}",
        nature: "p2 in place of p1 in the first term",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "first term read as -(t1/t2)*p1",
            edits: &[edit(img(5, "y2"), "-(t1/t2)*p2 + p2", "-(t1/t2)*p1 + p2")],
        }],
    },
    ErratumEntry {
        id: "G1112-H-a1-sign",
        system: G1112,
        targets: &[ham(1), ham(2)],
        printed: r"(h+\alpha_{1}+\alpha_{2}+\alpha_{3}+\alpha_{4}+\alpha_{5})",
        nature: "sign of a1 in both Hamiltonians; the same difference follows from the sign of a1 in the r3 images, which the canonical and roundtrip checks cannot tell apart",
        detection: &[Reference],
        forced: false,
        readings: &[Reading {
            label: "a1 replaced by -a1",
            edits: &[
                edit(ham(1), "1/((h + a1 + a2 + a3 + a4 + a5)*t1^2)", "1/((h - a1 + a2 + a3 + a4 + a5)*t1^2)"),
                edit(ham(1), "(eta + (2*h + a1)*t1)", "(eta + (2*h - a1)*t1)"),
                edit(
                    ham(2),
                    "1/((h + a1 + a2 + a3 + a4 + a5)*t2*t1*(t2 - 1))",
                    "1/((h - a1 + a2 + a3 + a4 + a5)*t2*t1*(t2 - 1))",
                ),
                edit(ham(2), "t1*(a1*(t2 - 1)", "t1*(-a1*(t2 - 1)"),
            ],
        }],
    },
    ErratumEntry {
        id: "G113-r4-x1-y1",
        system: G113,
        targets: &[img(4, "x1"), img(4, "y1")],
        printed: r"y_{1}=2t_{1}p_{1}^2-2t_{2}p_{1}p_{2}+\alpha_{4}p_{1}+\dfrac{1}{p_{1}}",
        nature: "the tail of the x1 image is printed inside y1, with the sign of the t1 term flipped; y1 itself is 1/p1",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "tail moved to x1 with -2*t1*p1^2, y1 = 1/p1",
            edits: &[
                edit(img(4, "x1"), "+ 2*p1*p2^2", "+ 2*p1*p2^2 - 2*t1*p1^2 - 2*t2*p1*p2 + a4*p1"),
                edit(img(4, "y1"), "2*t1*p1^2 - 2*t2*p1*p2 + a4*p1 + 1/p1", "1/p1"),
            ],
        }],
    },
    ErratumEntry {
        id: "G122-r1-squares",
        system: G122,
        targets: &[img(1, "p1"), img(1, "y1")],
        printed: r"p_{1}=-x_{1}y_{1}^2-\alpha_{1}x_{1}; y_{1}=-q_{1}p_{1}^2-\alpha_{1}q_{1}",
        nature: "exponent on the wrong factor: x1*y1^2 for x1^2*y1 and q1*p1^2 for q1^2*p1",
        detection: &[Canonical(Forward), Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "squares on x1 and q1",
            edits: &[
                edit(img(1, "p1"), "-x1*y1^2", "-x1^2*y1"),
                edit(img(1, "y1"), "-q1*p1^2", "-q1^2*p1"),
            ],
        }],
    },
    ErratumEntry {
        id: "G122-r2-y1",
        system: G122,
        targets: &[img(2, "y1")],
        printed: r"y_{1}=-{q_1}^2p_{1}-\alpha_{2}q_{1}-p_{2}+1",
        nature: "factor q1^2 missing on the last two terms",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "last two terms multiplied by q1^2",
            edits: &[edit(img(2, "y1"), "- p2 + 1", "- q1^2*p2 + q1^2")],
        }],
    },
    ErratumEntry {
        id: "G122-r4-y1-sign",
        system: G122,
        targets: &[img(4, "y1")],
        printed: r"y_{1}=-2\dfrac{q_{2}}{q_{1}}p_{2}",
        nature: "sign of the q2*p2/q1 term",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "+2*(q2/q1)*p2",
            edits: &[edit(img(4, "y1"), "-2*(q2/q1)*p2", "2*(q2/q1)*p2")],
        }],
    },
    ErratumEntry {
        id: "G122-H1-bare-t",
        system: G122,
        targets: &[ham(1)],
        printed: r"+\alpha_{1}tq_{2}p_{2})",
        nature: "bare time symbol t and a stray closing parenthesis",
        detection: &[Parse],
        forced: true,
        readings: &[
            Reading {
                label: "t read as t1, parenthesis dropped",
                edits: &[edit(ham(1), "+ a1*t*q2*p2)", "+ a1*t1*q2*p2")],
            },
            Reading {
                label: "t read as t2, parenthesis dropped",
                edits: &[edit(ham(1), "+ a1*t*q2*p2)", "+ a1*t2*q2*p2")],
            },
        ],
    },
    ErratumEntry {
        id: "G122-H2-prefactor",
        system: G122,
        targets: &[ham(2)],
        printed: r"t_{1}(t_{1}-t_{2})}\{(t_{1}-t_{2})q_{2}^2p_{2}^2 ... +t_{1}q_{1}^2p_{1}p_{2}",
        nature: "prefactor copied from the first Hamiltonian with t1 for t2, and q1^2 for q2^2 in the last quartic term",
        detection: &[Reference],
        forced: false,
        readings: &[Reading {
            label: "t2 in the prefactor, t1*q2^2*p1*p2",
            edits: &[
                edit(ham(2), "*t1*(t1 - t2)) * (", "*t2*(t1 - t2)) * ("),
                edit(ham(2), "+ t1*q1^2*p1*p2", "+ t1*q2^2*p1*p2"),
            ],
        }],
    },
    ErratumEntry {
        id: "G14-r3-y1-x1",
        system: G14,
        targets: &[img(3, "y1")],
        printed: r"-\alpha_{3}x_{1}",
        nature: "new variable x1 inside a backward image written in the old variables",
        detection: &[Parse],
        forced: true,
        readings: &[
            Reading {
                label: "x1 read as q1",
                edits: &[edit(img(3, "y1"), "- a3*x1 +", "- a3*q1 +")],
            },
            Reading {
                label: "x1 replaced by its backward image 1/q1",
                edits: &[edit(img(3, "y1"), "- a3*x1 +", "- a3*(1/q1) +")],
            },
        ],
    },
    ErratumEntry {
        id: "G14-r3-half-shift",
        system: G14,
        targets: &[img(3, "p1"), img(3, "q2"), img(3, "x2"), img(3, "y1")],
        printed: r"q_{2}=x_{1}^2x_{2}+\dfrac{t_{1}-t_{2}}{2}x_{1}+\dfrac{1}{x_{1}}; x_{2}=-q_{1}^3+q_{1}^2q_{2}-\dfrac{t_{1}-t_{2}}{2}q_{1}",
        nature: "sign of the (t1-t2)/2 shift: the printed forward map has [p1, q2] = h(t1-t2)x1^2",
        detection: &[Canonical(Forward), Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[
            Reading {
                label: "y2 term of p1 and p2 term of y1 negated",
                edits: &[
                    edit(img(3, "p1"), "- ((t1 - t2)/2)*y2", "+ ((t1 - t2)/2)*y2"),
                    edit(img(3, "y1"), "+ ((t1 - t2)/2)*p2", "- ((t1 - t2)/2)*p2"),
                ],
            },
            Reading {
                label: "shift of q2 and x2 negated",
                edits: &[
                    edit(img(3, "q2"), "+ ((t1 - t2)/2)*x1", "- ((t1 - t2)/2)*x1"),
                    edit(img(3, "x2"), "- ((t1 - t2)/2)*q1", "+ ((t1 - t2)/2)*q1"),
                ],
            },
        ],
    },
    ErratumEntry {
        id: "G14-H1-p1p2",
        system: G14,
        targets: &[ham(1)],
        printed: r"\dfrac{1}{2}(t_{1}-t_{2})p_{1}(p_{1}-p_{2})",
        nature: "sign of the p1*p2 term; the second Hamiltonian has p1*p2 + p2^2",
        detection: &[Reference],
        forced: false,
        readings: &[Reading {
            label: "p1*(p1 + p2)",
            edits: &[edit(ham(1), "p1*(p1 - p2)", "p1*(p1 + p2)")],
        }],
    },
    ErratumEntry {
        id: "G23-r3-p2-x1",
        system: G23,
        targets: &[img(3, "p2")],
        printed: r"p_{2}=\eta t_{1} (\dfrac{1}{x_{2}})^2",
        nature: "factor x1 missing in the first term; the backward image has q1 there",
        detection: &[Canonical(Forward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "eta*t1*x1*(1/x2)^2",
            edits: &[edit(img(3, "p2"), "eta*t1*(1/x2)^2 - eta", "eta*t1*x1*(1/x2)^2 - eta")],
        }],
    },
    ErratumEntry {
        id: "G23-r4-x2",
        system: G23,
        targets: &[img(4, "x2")],
        printed: r"x_{2}=q_{2}",
        nature: "x2 = q2 does not invert q2 = x2/x1",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "x2 = q2/q1",
            edits: &[edit(img(4, "x2"), "q2", "q2/q1")],
        }],
    },
    ErratumEntry {
        id: "G23-r4-t2",
        system: G23,
        targets: &[img(4, "p2"), img(4, "y1"), img(4, "y2")],
        printed: r"p_{2}=-\eta t_{1} (\dfrac{x_{1}}{x_{2}})^2 ... ; y_{1}=...-\eta t_{1}t_{2}\dfrac{q_{1}}{q_{2}}",
        nature: "the factor t2 appears in two backward terms but in no forward term",
        detection: &[Roundtrip],
        forced: false,
        readings: &[
            Reading {
                label: "forward (x1/x2)^2 term carries t2",
                edits: &[edit(img(4, "p2"), "-eta*t1*(x1/x2)^2", "-eta*t1*t2*(x1/x2)^2")],
            },
            Reading {
                label: "t2 dropped from the backward images",
                edits: &[
                    edit(img(4, "y1"), "- eta*t1*t2*(q1/q2)", "- eta*t1*(q1/q2)"),
                    edit(img(4, "y2"), "eta*t1*t2*q1*(1/q2)^2", "eta*t1*q1*(1/q2)^2"),
                ],
            },
        ],
    },
    ErratumEntry {
        id: "G23-r5-backward",
        system: G23,
        targets: &[img(5, "x2"), img(5, "y2")],
        printed: r"x_{2}=\dfrac{q_{1}}{q_{2}}; y_{2}=q_{1}p_{2}-\dfrac{1}{2}",
        nature: "x2 inverted, q1/q2 for q2/q1, and the constant in y2 missing the factor q1",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "x2 = q2/q1, y2 = q1*p2 + q1/2",
            edits: &[
                edit(img(5, "x2"), "q1/q2", "q2/q1"),
                edit(img(5, "y2"), "q1*p2 - 1/2", "q1*p2 + (1/2)*q1"),
            ],
        }],
    },
    ErratumEntry {
        id: "G23-r6-p2",
        system: G23,
        targets: &[img(6, "p2")],
        printed: r"p_{2}=-x_{1}x_{2}^2y_{2}",
        nature: "spurious factor x1 in the y2 term",
        detection: &[Canonical(Forward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "-x2^2*y2",
            edits: &[edit(img(6, "p2"), "-x1*x2^2*y2", "-x2^2*y2")],
        }],
    },
    ErratumEntry {
        id: "G23-H1-stray-2",
        system: G23,
        targets: &[ham(1)],
        printed: r"-\eta t_{1}2q_{1}p_{2}",
        nature: "stray factor 2 on the q1*p2 term and a missing q2*p1^2 term",
        detection: &[Reference],
        forced: false,
        readings: &[Reading {
            label: "-q2*p1^2 - eta*t1*q1*p2",
            edits: &[edit(ham(1), "- eta*t1*2*q1*p2", "- q2*p1^2 - eta*t1*q1*p2")],
        }],
    },
    ErratumEntry {
        id: "G5-r3-y1-bare-t",
        system: G5,
        targets: &[img(3, "y1")],
        printed: r"-2tq_{1}q_{2}",
        nature: "bare time symbol t",
        detection: &[Parse],
        forced: true,
        readings: &[
            Reading {
                label: "t read as t1",
                edits: &[edit(img(3, "y1"), "- 2*t*q1*q2", "- 2*t1*q1*q2")],
            },
            Reading {
                label: "t read as t2",
                edits: &[edit(img(3, "y1"), "- 2*t*q1*q2", "- 2*t2*q1*q2")],
            },
        ],
    },
    ErratumEntry {
        id: "G5-r3-y1-alpha",
        system: G5,
        targets: &[img(3, "y1")],
        printed: r"-(\alpha_{1}-2\alpha_{3})q_{1}",
        nature: "a3 in place of a2; the forward image has a2 and the type has no third parameter",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "a3 read as a2",
            edits: &[edit(img(3, "y1"), "(a1 - 2*a3)", "(a1 - 2*a2)")],
        }],
    },
    ErratumEntry {
        id: "G5-r3-y1-q1q2p2",
        system: G5,
        targets: &[img(3, "y1")],
        printed: r"-2q_{1}q_{2}p_{2}",
        nature: "coefficient 2 on q1*q2*p2 where inverting the forward map gives 1",
        detection: &[Canonical(Backward), Roundtrip],
        forced: false,
        readings: &[Reading {
            label: "-q1*q2*p2",
            edits: &[edit(img(3, "y1"), "- 2*q1*q2*p2", "- q1*q2*p2")],
        }],
    },
];

pub fn entries_for(system: GarnierName) -> impl Iterator<Item = &'static ErratumEntry> {
    REGISTRY.iter().filter(move |e| e.system == system)
}

pub fn by_id(id: &str) -> Option<&'static ErratumEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}
