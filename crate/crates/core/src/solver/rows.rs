//! Construction rows per claim, in case order. Syntax is described in `templates`.
//! Main-path sizes of 0 match any size.

use super::delta3::Regime;

pub struct Family {
    pub regime: Regime,
    pub sizes: &'static [usize],
    pub decls: &'static str,
    pub rows: &'static [(&'static str, &'static str)],
}

const L7_OFF: Regime = Regime::Lemma7 { v_on_cycle: false };
const L7_ON: Regime = Regime::Lemma7 { v_on_cycle: true };

static FAMILIES: &[Family] = &[
    Family {
        regime: L7_OFF,
        sizes: &[],
        decls: "w=CK; w'=P1V; Pb=IK",
        rows: &[("Case1", "v3 v v2 Q v1 C@w"), ("Case1", "Pb? w' v3 v v2 Q v1 C@w")],
    },
    Family { regime: L7_ON, sizes: &[], decls: "Pb=IK", rows: &[("Case2", "C~v v1 Q Pb?")] },
    // Case1: d(v3) = 1, Case2: d(v3) > 1
    Family {
        regime: Regime::Claim5,
        sizes: &[11],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4 x4 w5 x5 w6); w'=P1V; w''=P1V; Pb=P2; Pc=P2",
        rows: &[
            ("Case1", "v3 v v2 w' x2..w6 v1 w1..w2 Q Pb?"),
            ("Case2", "Pb? w'' v3 v v2 w' x2..w6 v1 w1..w2 Q Pc?"),
        ],
    },
    Family {
        regime: Regime::Claim6,
        sizes: &[10],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4 x4 w5 x5); w'=P1V; w''=P1V; Pb=P2",
        rows: &[
            ("Case1", "x5 w5 v1 Q w1..x4 w' v2 v v3"),
            ("Case1", "x5 w5 v1 w1..x4 w' v2 Q v v3"),
            ("Case2", "x5 w5 v1 w1..x4 w' v2 v v3 w'' Q Pb?"),
        ],
    },
    Family {
        regime: Regime::Claim7,
        sizes: &[9],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4 x4 w5); Pb=P2; Pd=P2; Pc=P3; Pe=P13; z=P1V; t=P1V",
        rows: &[
            ("Case1.1", "v3 v v2 w1..w5 Q Pc v1 Pb?"),
            ("Case1.2.1", "Pb? v2 w1..w5 v3 v v1 Pd?"),
            ("Case1.2.1", "Pb? x1 w1 v2 v v3 w5..w2 v1 Pd?"),
            ("Case1.2.1", "Pb? x3..w1 v2 v v3 w5..w4 v1 Pd?"),
            ("Case1.2.1", "Pb? x4 w5 v3 v v2 w1..w4 v1 Pd?"),
            ("Case1.2.2", "Pb? Pe x1 w2 x2 w3 v3 v v2 w1 x3..w5 v1 Pd?"),
            ("Case1.2.2", "Pb? Pe x2 w2 x1 w1 v2 v v3 w3 x3..w5 v1 Pd?"),
            ("Case1.2.2", "Pb? Pe v2 v v3 w3 x2 w2 x1 w1 x3..w5 v1 Pd?"),
            ("Case1.2.2", "Pb? Pe v3 v v2 w1..w5 v1 Pd?"),
            ("Case1.2.3", "Pb? z v3 v v2 w1..w5 v1 Pd?"),
            ("Case1.2.3", "Pb? z v3 w5..w1 v2 v v1 Pd?"),
            ("Case1.2.3", "Pb? z v3 v v2 w1 x1 w5..w2 v1 Pd?"),
            ("Case1.2.3", "Pb? z v3 v v2 w5 x4 w1..w4 v1 Pd?"),
            ("Case1.2.3", "Pd? v1 w2 x1 w1 x3 w3 x2 w5 x4 w4 z v3 v v2 Pb?"),
            ("Case2", "v3 v v2 w3 x2..w1 v1 w5..x3 Pc Pb?"),
            ("Case2", "v3 v v2 w3 x3..w5 v1 w1..x2 Pc Pb?"),
            ("Case2", "v3 v v2 Pc w1..w5 v1 Pb?"),
            ("Case2", "Pd? z v3 v v2 w3 x2..w1 v1 w5..x3 Pb?"),
            ("Case2", "Pd? z v3 v v2 w3 x3..w5 v1 w1..x2 Pb?"),
            ("Case2", "Pd? v1 w1..w5 z v3 v v2 Pb?"),
            ("Case3", "v3 v v2 t Pa v1 Pb?"),
            ("Case3", "Pb? v1 w5..w1 v3 v v2 t Pd?"),
            ("Case3", "Pb? z v3 v v2 t Pa v1 Pd?"),
        ],
    },
    Family {
        regime: Regime::Claim8,
        sizes: &[8],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4 x4); Pb=P3; Pc=P3; Pd=P2; Pe=P13; w'=P1V; z=P1V; t=P1V",
        rows: &[
            ("Case1.1", "v3 v v2 Pb v1 Pc Q w1..x4"),
            ("Case1.1", "v3 v v2 w1 x1 Pb Q Pc v1 w2..x4"),
            ("Case1.1", "v3 v v2 w1..x3 Pb Q Pc v1 w4 x4"),
            ("Case1.2.1", "Pd? v1 Pc w' x1 w2 x2 w3 v3 v v2 w1 x3 w4 x4"),
            ("Case1.2.1", "Pd? v1 Pc w' x2 w2 x1 w1 v2 v v3 w3 x3 w4 x4"),
            ("Case1.2.1", "Pd? v1 Pc w' v2 v v3 w3 x2 w2 x1 w1 x3 w4 x4"),
            ("Case1.2.1", "Pd? v1 Pc w' v3 v v2 w1..x4"),
            ("Case2", "v3 v v2 Pb Pc v1 w1..x4"),
            ("Case2", "v3 v v2 w3 x2..w1 v1 Pc Pb x3 w4 x4"),
            ("Case2", "v3 v v2 w1 x1 w2 v1 Pc Pb x2..x4"),
            ("Case2", "v3 v v2 w3 x2 Pb Pc v1 w2 x1 w1 x3 w4 x4"),
            ("Case2", "v3 v v2 Pe Pb v1 w1..x4"),
            ("Case2", "v3 v v2 w3 x2..w1 v1 Pb Pe x3 w4 x4"),
            ("Case2", "Pd? z v3 v v2 Pb v1 w1..x4"),
            ("Case2", "Pd? v1 Pb x2..w1 z v3 v v2 w3..x4"),
            ("Case2", "Pd? z v3 v v2 w3..w1 v1 Pb x3 w4 x4"),
            ("Case3", "v3 v v2 t Pb v1 w1..x4"),
            ("Case3", "Pd? z v3 v v2 t Pb v1 w1..x4"),
        ],
    },
    // Base: d(v3) = 1
    Family {
        regime: Regime::Claim10,
        sizes: &[0, 0],
        decls: "Pa=M0; Pb=M1; Pc=P2; Pd=P2; w'=P1V; w''=P1V",
        rows: &[
            ("Base", "v3 v v2 w' Pa v1 Pb Pc?"),
            ("Case1", "Pc w'' v3 v v2 w' Pa v1 Pb Pd"),
            ("Case2", "Pc w'' v3 v v2 w' Pa v1 Pb"),
        ],
    },
    Family {
        regime: Regime::Claim10,
        sizes: &[0, 6],
        decls: "Pa=M0; Pb=M1(s1 t1 s2 t2 s3 t3); w'=P1V; w''=P1V",
        rows: &[("Case3", "t3 s3 t2 w' v2 v v3 w'' s1 t1 s2 v1 Pa")],
    },
    Family {
        regime: Regime::Claim10,
        sizes: &[0, 7],
        decls: "Pa=M0; Pb=M1(s1 t1 s2 t2 s3 t3 s4); w'=P1V; w''=P1V",
        rows: &[("Case3", "s4 t3 s3 t2 w' v2 v v3 w'' s1 t1 s2 v1 Pa")],
    },
    Family {
        regime: Regime::Claim12,
        sizes: &[7, 5],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4); Pb=M1(s1 t1 s2 t2 s3); Pc=P2; Pd=P2; w'=P1V; z=P1V; y=P1V",
        rows: &[
            ("Case1.1", "v3 v v2 s1..s3 Pa v1 Pc?"),
            ("Case1.1", "Pc? w' v2 v v3 s3..s1 Pa v1 Pd?"),
            ("Case1.1", "Pc? w' v3 s3..s1 v2 v v1 Pa Pd?"),
            ("Case1.1", "Pc? w' t1 s1 v2 v v3 s3 t2 s2 v1 Pa Pd?"),
            ("Case1.1", "Pc? w' t2 s3 v3 v v2 s1 t1 s2 v1 Pa Pd?"),
            ("Case1.1", "Pc? z v3 v v2 s1..s3 Pa v1 Pd?"),
            ("Case1.2", "v3 v v2 y Pb Pa v1 Pc?"),
            ("Case1.2", "Pc? s3..s1 v3 v v2 y Pa v1 Pd?"),
            ("Case1.2", "Pc? s1..s3 v3 v v2 y Pa v1 Pd?"),
            ("Case1.2", "Pc? z v3 v v2 y Pb Pa v1 Pd?"),
        ],
    },
    Family {
        regime: Regime::Claim12,
        sizes: &[7, 4],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4); Pb=M1(s1 t1 s2 t2); Pc=P2; Pe=P13; t=P1V; y=P1V; z=P1V",
        rows: &[
            ("Case2.1", "v3 v v2 s1 t1 Pa v1 s2 t2"),
            ("Case2.1", "v3 v v2 w1 x1 w2 v1 w4 x3 w3 x2 s1..t2"),
            ("Case2.1", "v3 v v2 s1 t1 Pe Pa v1 s2 t2"),
            ("Case2.1", "v3 v v2 Pe w1 x1 w2 v1 w4 x3 w3 x2 s1..t2"),
            ("Case2.1", "Pc? v1 Pa t v3 v v2 Pb"),
            ("Case2.2", "v3 v v2 y Pa v1 Pb"),
            ("Case2.2", "Pc? v1 Pa y v2 v v3 Pb"),
            ("Case2.2", "Pc? v1 Pa z v3 v v2 y Pb"),
        ],
    },
    Family {
        regime: Regime::Claim12,
        sizes: &[6, 5],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3); Pb=M1(s1 t1 s2 t2 s3); Pc=P23; Pd=P3; w''=P1V; y=P1V; z=P1V",
        rows: &[
            ("Case3.1", "v3 v v2 Pb Pd v1 Pa"),
            ("Case3.1.1", "Pc? w'' t1 s1 v2 v v3 s3 t2 s2 v1 Pa"),
            ("Case3.1.1", "Pc? w'' v2 Pb v3 v v1 Pa"),
            ("Case3.1.1", "Pc? w'' t2 s3 v3 v v2 s1 t1 s2 v1 Pa"),
            ("Case3.1.1", "Pc? w'' v3 s3..s1 v2 v v1 Pa"),
            ("Case3.1.2", "Pc z v3 v v2 Pb v1 Pa"),
            ("Case3.1.2", "Pc z v3 v v2 s3..s1 x2..w1 v1 w3 x3"),
            ("Case3.1.2", "Pc z v3 s3..s1 v2 v v1 Pa"),
            ("Case3.2", "v3 v v2 y Pb v1 Pa"),
            ("Case3.2", "Pc? y v2 v v3 Pb v1 Pa"),
            ("Case3.2", "Pc? y v2 v v3 z Pb v1 Pa"),
        ],
    },
    Family {
        regime: Regime::Claim12,
        sizes: &[6, 4],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3); Pb=M1(s1 t1 s2 t2); Pd=P3; y=P1V; z=P1V",
        rows: &[("Case4.1", "Pa v1 Pd z v3 v v2 Pb"), ("Case4.2", "Pa v1 Pd z v3 v v2 y Pb")],
    },
    Family {
        regime: Regime::Claim13,
        sizes: &[7],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3 w4); Pb=P2(y1 z1); Pc=P2(y2 z2); Pd=P3(s1 t1 s2); Pe=P3(q1 r1 q2); \
                Pf=P123; w'=P1V; w''=P1V; v'=P1V; w*=P1V",
        rows: &[
            ("Case1.1.1", "v3 v v2 Pa Pd v1 Pe Pb?"),
            ("Case1.1.1", "v3 v v2 w4 x3 w3 v1 w2 x1 w1 Pd x2 Pe Pb?"),
            ("Case1.1.1", "v3 v v2 w4 x3 w3 v1 Pd Pe x2..w1 Pb?"),
            ("Case1.1.2", "Pb? x2 w2 x1 w1 v3 v v2 w4 x3 w3 v1 Pd Pc?"),
            ("Case1.1.2", "Pb? {w2 x1 w1 v3 v v2 w4 x3 w3 x2} Pd v1 Pc?"),
            ("Case1.1.2", "Pb? v1 w2 x1 w1 v3 v v2 w4 x3 w3 x2 Pd Pc?"),
            ("Case1.1.2", "Pb? {w2 x1 w1 v3 v v2 w4 x3 w3 v1} Pd x2 Pc?"),
            ("Case1.1.2", "Pb? v3 v v2 w4 x3 w3 v1 w2 x1 w1 Pd x2 Pc?"),
            ("Case1.1.2", "Pb? x2 s2 t1 s1 v3 v v2 w4 x3 w3 v1 w2 x1 w1 Pc?"),
            ("Case1.1.2", "Pb? x2 Pd w' v3 v v2 w4 x3 w3 v1 w2 x1 w1 Pc?"),
            ("Case1.1.2", "Pb? v1 Pd w' v3 v v2 w4..w1 Pc?"),
            ("Case1.1.2", "Pb? x2..w1 Pd v1 w3 x3 w4 v2 v v3 w' Pc?"),
            ("Case1.2", "v3 v v2 w4 x3 w3 v1 w1..x2 Pb"),
            ("Case1.2", "v3 v v2 w1 x1 w2 v1 w4..x2 Pb"),
            ("Case1.2", "v3 v v2 Pf w1 x1 w2 v1 w4..x2 Pb"),
            ("Case1.2", "Pb v2 Pf Pa v1 v v3 Pc?"),
            ("Case1.2", "Pb v2 v v3 Pf w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.2", "Pb v2 v v3 Pd w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.2", "Pb v2 v v3 w' w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.2", "Pb v2 v v3 w' Pa v1 Pc?"),
            ("Case1.3", "v3 v v2 Pd w1 x1 w2 v1 w4..x2 Pb?"),
            ("Case1.3", "v3 v v2 Pd w1..w4 v1 Pb?"),
            ("Case1.4", "v3 v v2 v' w1 x1 w2 v1 w4..x2 Pb?"),
            ("Case1.4", "v3 v v2 v' w1..w4 v1 Pb?"),
            ("Case1.4", "Pb? v3 v v2 v' w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pb? v3 v v2 v' w1..w4 v1 Pc?"),
            ("Case1.4", "Pb? Pd v3 v v2 v' w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pb? Pd v3 v v2 v' w1..w4 v1 Pc?"),
            ("Case1.4", "Pf v2 v v3 v' w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pf v2 v' v3 v w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pf v3 v v2 v' w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pf v3 v' v2 v w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pf v2 v v3 v' w1..w4 v1 Pc?"),
            ("Case1.4", "Pf v2 v' v3 v w1..w4 v1 Pc?"),
            ("Case1.4", "Pf v3 v v2 v' w1..w4 v1 Pc?"),
            ("Case1.4", "Pf v3 v' v2 v w1..w4 v1 Pc?"),
            ("Case1.4", "Pb? v' v2 v v3 w'' w1 x1 w2 v1 w4..x2 Pc?"),
            ("Case1.4", "Pb? v' v2 v v3 w'' w1..w4 v1 Pc?"),
            ("Case2.1.1", "v3 v v2 w4..w1 v1 Pb?"),
            ("Case2.1.2", "v3 v v2 w1..w4 v1 Pb?"),
            ("Case2.1.3", "v3 v v2 Pd Pa v1 Pb?"),
            ("Case2.1.3", "v3 v v2 w3 x3 w4 v1 w1..x2 Pd Pb?"),
            ("Case2.1.3", "v3 v v2 w3..w1 v1 w4 x3 Pd Pb?"),
            ("Case2.1.4", "v3 v v2 Pa Pd v1 Pb?"),
            ("Case2.1.4", "v3 v v1 w2..w4 v2 w1 x1 Pd Pb?"),
            ("Case2.1.4", "v3 v v1 w2 x1 w1 v2 w4..x2 Pd Pb?"),
            ("Case2.2.1.A", "Pb? v1 Pa v3 v v2 Pd Pc?"),
            ("Case2.2.1.A", "Pb? v1 v v3 Pa v2 Pd Pc?"),
            ("Case2.2.1.A", "Pb? v2 v v3 Pa v1 Pd Pc?"),
            ("Case2.2.1.A", "Pb? v2 Pa v3 v v1 Pd Pc?"),
            ("Case2.2.1.A", "Pb? v3 Pa v1 v v2 Pd Pc?"),
            ("Case2.2.1.A", "Pb? v3 Pa v2 v v1 Pd Pc?"),
            ("Case2.2.1.B", "Pb? v1 w2..w4 x1 w1 v3 v v2 Pd Pc?"),
            ("Case2.2.1.B", "Pb? v1 w2..w4 v2 v v3 w1 x1 Pd Pc?"),
            ("Case2.2.1.B", "Pb? v2 w1 v3 v v1 w2..w4 x1 Pd Pc?"),
            ("Case2.2.1.B", "Pb? v2 w4..w2 v1 v v3 w1 x1 Pd Pc?"),
            ("Case2.2.1.B", "Pb? v3 v v1 w2..w4 x1 w1 v2 Pd Pc?"),
            ("Case2.2.1.B", "Pb? v3 v v1 w2..w4 v2 w1 x1 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v1 v v3 Pa v2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v1 v v3 w1..x2 w4 x3 w3 v2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v2 {x1 w1 v3 v v1 w2} w4..x2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v2 {x1 w1 v3 v v1 w2} w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v2 {x1 w1 v3 v v1 w2} s2 t1 s1 x2..w4 Pc?"),
            ("Case2.2.1.C.1", "Pb {x1 w1 v3 v v1 w2} v2 w4..x2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb {x1 w1 v3 v v1 w2} v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v2 {x1 w1 v3 v v1 w2} Pf Pd x2..w4 Pc?"),
            ("Case2.2.1.C.1", "Pb? v3 v v1 w2 x1 w1 v2 w4..x2 Pd Pc?"),
            ("Case2.2.1.C.1", "Pb? v3 v v1 w2 x1 w1 v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.C.2", "Pb? v1 v v2 Pa v3 Pd Pc?"),
            ("Case2.2.1.C.2", "Pb? v1 w2 x1 w1 v3 v v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.C.2", "Pb? v2 w1 x1 w2 v1 v v3 w4..x2 Pd Pc?"),
            ("Case2.2.1.C.2", "Pb? v2 v v1 w2 x1 w1 v3 s1 t1 s2 x2..w4 Pc?"),
            ("Case2.2.1.C.2", "Pb? v3 v v1 w2 x1 w1 v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.C.2", "Pb? v3 w1 v2 v v1 w2 x1 w4..x2 Pd Pc?"),
            ("Case2.2.1.C.2", "Pb? v3 v v2 w1 x1 w2 v1 w4 x3 w3 x2 Pd Pc?"),
            ("Case2.2.1.D", "Pb? v1 w4 x3 w3 v2 v v3 w1..x2 Pd Pc?"),
            ("Case2.2.1.D", "Pb? v1 w2 x1 w1 v3 v v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.D", "Pb? v2 w3 x3 w4 v1 v v3 w1..x2 Pd Pc?"),
            ("Case2.2.1.D", "Pb? v2 w3 x3 w4 x2..w1 v3 v v1 Pd Pc?"),
            ("Case2.2.1.D", "Pb? v3 v v2 w3 x3 w4 v1 w2 x1 w1 x2 Pd Pc?"),
            ("Case2.2.1.D", "Pb? v3 v v2 w3 x3 w4 x2 w1 x1 w2 v1 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v1 w2..w4 x1 w1 v3 v v2 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v1 v v3 Pa v2 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v2 w3 x3 w4 x1 w2 x2 w1 v3 v v1 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v2 w3 x3 w4 x1 w1 x2 w2 v1 v v3 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v2 s2 t1 s1 x1 w1 v3 v v1 w2..w4 Pc?"),
            ("Case2.2.1.E", "Pb? v2 w4..w2 v1 v v3 w1 x1 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v3 v v1 w2 x2 w1 x1 w4 x3 w3 v2 Pd Pc?"),
            ("Case2.2.1.E", "Pb? v3 v v1 w2 x1 w1 x2..w4 v2 Pd Pc?"),
            ("Case2.2.1.F.1", "Pb? v1 w4 x3 w3 v2 v v3 w1..x2 Pd Pc?"),
            ("Case2.2.1.F.1", "Pb? v1 w2 x1 w1 v3 v v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.F.1", "Pb? v2 v v3 Pa v1 Pd Pc?"),
            ("Case2.2.1.F.1", "Pb? v2 w3 x3 w4 x2..w1 v3 v v1 Pd Pc?"),
            ("Case2.2.1.F.1", "Pb? v3 v v2 w3 x3 w4 v1 w2 x1 w1 x2 Pd Pc?"),
            ("Case2.2.1.F.1", "Pb? v3 v v2 w3 x3 w4 x2 w1 x1 w2 v1 Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v1 w2 x1 w1 v3 v v2 w4..x2 Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v1 w2 x1 w1 v3 v w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v2 w4..x2 {x1 w1 v3 v v1 w2} Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v2 w3 x3 w4 x2 {x1 w1 v3 v v1 w2} Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v2 s1 t1 s2 {x1 w1 v3 v v1 w2} x2..w4 Pc?"),
            ("Case2.2.1.F.2", "Pb {x1 w1 v3 v v1 w2} x2..w4 v2 Pd Pc?"),
            ("Case2.2.1.F.2", "Pb {x1 w1 v3 v v1 w2} x2 w4 x3 w3 v2 Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v2 w4..x2 {x1 w1 v3 v v1 w2} Pf Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v2 w3 x3 w4 x2 {x1 w1 v3 v v1 w2} Pf Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v3 w1 x1 w2 v1 v v2 w4..x2 Pd Pc?"),
            ("Case2.2.1.F.2", "Pb? v3 w1 x1 w2 v1 v v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.F.3", "Pb? v1 v v2 w3 x3 w4 v3 w1..x2 Pd Pc?"),
            ("Case2.2.1.F.3", "Pb? v1 w2 x1 w1 v3 v v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.F.3", "Pb? v2 v v1 w2 x1 w1 v3 w4..x2 Pd Pc?"),
            ("Case2.2.1.F.3", "Pb? v2 w3 x3 w4 x2 w1 x1 w2 v1 v v3 Pd Pc?"),
            ("Case2.2.1.F.3", "Pb? v3 w4 x3 w3 v2 v v1 w2 x1 w1 x2 Pd Pc?"),
            ("Case2.2.1.F.3", "Pb? v3 w1 x1 w2 v1 v v2 w3 x3 w4 x2 Pd Pc?"),
            ("Case2.2.1.G", "Pb? w' {w1 x1 w2 x2 w3 v2 v v3} v1 s1 t1 s2 x3 w4 Pc?"),
            ("Case2.2.1.H", "Pb? v2 s1 t1 s2 x1 w1 v3 v v1 w2..w4 Pc?"),
            ("Case2.2.1.I", "Pb? v3 s1 t1 s2 x2 w3 v2 v v1 w2 x1 w1 x3 w4 Pc?"),
            ("Case2.2.2", "Pc? x2 s2 t1 s1 v1 w2 x1 w1 w4 x3 w3 v2 v v3 Pb"),
            ("Case2.2.2", "Pc? x2 s2 t1 s1 v2 w3 x3 w4 w1 x1 w2 v1 v v3 Pb"),
            ("Case2.2.2", "Pc? x2 s2 t1 s1 v3 v v2 w3 x3 w4 v1 w2 x1 w1 Pb"),
            ("Case2.2.2", "Pc? v3 s1 t1 s2 x2 w4 x3 w3 v2 v v1 w2 x1 w1 Pb"),
            ("Case2.2.2", "Pc? x2 s2 t1 s1 v3 w4 x3 w3 v2 v v1 w2 x1 w1 Pb"),
            ("Case2.2.3", "Pc? v1 s2 t1 s1 v3 v v2 w3 x3 w4 w1 x1 w2 x2 Pb?"),
            ("Case2.2.3", "Pc? v2 v v3 s1 t1 s2 v1 w2 x1 w1 w4 x3 w3 x2 Pb?"),
            ("Case2.2.3", "Pc? v3 s1 t1 s2 v1 v v2 w3 x3 w4 w1 x1 w2 x2 Pb?"),
            ("Case2.2.3", "Pc? v1 v v3 s1 t1 s2 v2 w3 x3 w4 w1 x1 w2 x2 Pb?"),
            ("Case2.2.3", "Pc? v2 s2 t1 s1 v3 v v1 w2 x1 w1 w4 x3 w3 x2 Pb?"),
            ("Case2.2.3", "Pc? v3 s1 t1 s2 v2 v v1 w2 x1 w1 w4 x3 w3 x2 Pb?"),
            ("Case2.2.3", "Pc? x2 s1 t1 s2 v3 v v2 w3 x3 w4 v1 w2 x1 w1 Pb?"),
            ("Case2.2.3", "Pb? x2 s1 t1 s2 v3 v v2 w3 x3 w4 w1 x1 w2 v1 Pc?"),
            ("Case2.2.3", "Pb? x2 s1 t1 s2 v3 v v1 w2 x1 w1 w4 x3 w3 v2 Pc?"),
            ("Case2.2.3", "Pb? x2 w4 x3 w3 v2 v v1 w2 x1 w1 s1 t1 s2 v3 Pc?"),
            ("Case2.2.3", "Pc? x2 s1 t1 s2 v3 w4 x3 w3 v2 v v1 w2 x1 w1 Pb?"),
            ("Case2.2.4", "Pb? v1 Pd Pa w* v3 v v2 Pc?"),
            ("Case2.2.4", "Pb? v1 Pd w* v3 v v2 w3 x3 w4 w1..x2 Pc?"),
            ("Case2.2.4", "Pb? v1 Pd w* v3 v v2 w3..w1 w4 x3 Pc?"),
            ("Case2.2.4", "Pb? v1 w4..w1 s2 t1 s1 v2 v v3 w* Pc?"),
            ("Case2.2.4", "Pb? v1 v v3 w* w1..w4 v2 s1 t1 s2 Pc?"),
            ("Case2.2.4", "Pb? v1 v v2 s1 t1 s2 w1..w4 v3 w* Pc?"),
        ],
    },
    Family {
        regime: Regime::Claim14,
        sizes: &[6],
        decls: "Pa=M0(w1 x1 w2 x2 w3 x3); Pb=P2(y1 z1); Pd=P3(s1 t1 s2); Pe=P3(q1 r1 q2); Pf=P13; \
                w'=P1V; v'=P1V; z=P1V",
        rows: &[
            ("Case1.1.1", "v3 v v2 w1 x1 w2 v1 Pd Pe x2 w3 x3"),
            ("Case1.1.1", "v3 v v2 w1 x1 Pd Pe v1 w2..x3"),
            ("Case1.1.1", "v3 v v2 Pd Pe v1 w2 x1 w1 x2 w3 x3"),
            ("Case1.1.1", "v3 v v1 w2 x1 w1 v2 Pd Pe x2 w3 x3"),
            ("Case1.1.2", "Pb? x2 Pe Pd v3 v v2 w1 x1 w2 v1 w3 x3"),
            ("Case1.1.2", "Pb x2 Pd v3 v v2 w1 x1 w2 v1 w3 x3"),
            ("Case1.1.2", "Pb v3 v v2 Pd x2 w1 x1 w2 v1 w3 x3"),
            ("Case1.1.2", "Pb v3 v v2 w1 x1 w2 v1 Pd x2 w3 x3"),
            ("Case1.1.2", "Pb? Pd v1 Pe w' v3 v v2 Pa"),
            ("Case1.1.2", "Pb? Pd x2 Pe w' v3 v v2 w1 x1 w2 v1 w3 x3"),
            ("Case1.1.2", "Pb? w' v3 v v2 w1 x1 w2 v1 Pd Pe x2 w3 x3"),
            ("Case1.2", "Pb v2 v v3 s1 t1 s2 v1 Pa"),
            ("Case1.2", "Pb v2 v v3 s1 t1 s2 x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.2", "Pb v2 v v3 z s1 t1 s2 v1 Pa"),
            ("Case1.2", "Pb v2 v v3 z s1 t1 s2 x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.3", "v3 v v2 s1 t1 s2 v1 Pa"),
            ("Case1.3", "v3 v v2 s1 t1 s2 x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.3.1", "Pb? v1 w2 x1 w1 v2 v v3 s2 t1 s1 x2 w3 x3"),
            ("Case1.3.1", "Pb? x2 s1 t1 s2 v3 v v2 w1 x1 w2 v1 w3 x3"),
            ("Case1.3.1", "Pb? v1 w2 x1 w1 t1 s2 v3 v v2 s1 x2 w3 x3"),
            ("Case1.3.1", "Pb? x2 s1 v2 v v3 s2 t1 w1 x1 w2 v1 w3 x3"),
            ("Case1.3.1", "Pb {v v2 s1 t1 s2 v3} Pe v1 Pa"),
            ("Case1.3.1", "Pb {v v2 s1 t1 s2 v3} Pe x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.3.1", "Pb? Pf {v v2 s1 t1 s2 v3} Pe v1 Pa"),
            ("Case1.3.1", "Pb? Pf {v v2 s1 t1 s2 v3} Pe x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.3.2", "Pb v3 v v2 Pd Pe v1 Pa"),
            ("Case1.3.2", "Pb v3 v v2 Pd Pe x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.3.3", "Pb? v1 s2 t1 s1 v2 v v3 q1 r1 q2 Pa"),
            ("Case1.3.3", "Pb? x2 s2 t1 s1 v2 v v3 q1 r1 q2 w1 x1 w2 v1 w3 x3"),
            ("Case1.3.3", "Pb? x2..w1 v1 s2 t1 s1 v2 v v3 q1 r1 q2 w3 x3"),
            ("Case1.3.3", "Pb? v1 w1..x2 s2 t1 s1 v2 v v3 q1 r1 q2 w3 x3"),
            ("Case1.3.4", "Pb? z v3 v v2 Pd Pe v1 Pa"),
            ("Case1.3.4", "Pb? z v3 v v2 Pd Pe x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.4", "v3 v v2 v' x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.4", "Pb? v1 w2 x1 w1 v3 v v2 v' x2 w3 x3"),
            ("Case1.4", "Pb? x2 s1 t1 s2 v' v2 v v3 w1 x1 w2 v1 w3 x3"),
            ("Case1.4", "Pb? x2..w1 v3 v v2 v' s2 t1 s1 v1 w3 x3"),
            ("Case1.4", "Pb? v1 w2 x1 w1 v2 v v3 v' x2 w3 x3"),
            ("Case1.4", "Pb? x2..w1 v2 v' v3 v v1 w3 x3"),
            ("Case1.4", "Pb v2 v' v3 v v1 Pa"),
            ("Case1.4", "Pb v3 v' v2 v v1 Pa"),
            ("Case1.4", "Pb? Pd v2 v' v3 v v1 Pa"),
            ("Case1.4", "Pb? Pd v3 v' v2 v v1 Pa"),
            ("Case1.4", "Pb? z v2 v' v3 v v1 Pa"),
            ("Case1.4", "Pb? z v3 v' v2 v v1 Pa"),
            ("Case1.4", "Pb v3 v v2 v' x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.4", "Pb? Pd v3 v v2 v' x2 w2 x1 w1 v1 w3 x3"),
            ("Case1.4", "Pb? z v3 v v2 v' x2 w2 x1 w1 v1 w3 x3"),
        ],
    },
];

pub fn family_rows() -> &'static [Family] {
    FAMILIES
}
