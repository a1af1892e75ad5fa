//! Reference values shared by the integration tests.
#![allow(dead_code)]

use braided_core::exact::parse_scalar;
use braided_core::{Scalar, ScalarMatrix};

pub fn s(src: &str) -> Scalar {
    parse_scalar(src).unwrap()
}

pub fn matrix(rows: &[&[&str]]) -> ScalarMatrix {
    ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|e| s(e)).collect()).collect())
}

pub fn p1_display() -> ScalarMatrix {
    matrix(&[&["(mu-h)/(2*mu)", "-1/mu"], &["(h^2-mu^2)/(4*mu)", "(mu+h)/(2*mu)"]])
}

pub fn p2_display() -> ScalarMatrix {
    matrix(&[&["(mu+h)/(2*mu)", "1/mu"], &["(mu^2-h^2)/(4*mu)", "(mu-h)/(2*mu)"]])
}

pub fn p0_display() -> ScalarMatrix {
    matrix(&[
        &["1/2", "0", "h/(h^2-mu^2)", "2/(h^2-mu^2)"],
        &["1/2", "1", "-h/(h^2-mu^2)", "-2/(h^2-mu^2)"],
        &["-h/4", "h/4", "-h^2/(h^2-mu^2)", "-2*h/(h^2-mu^2)"],
        &["(2*h^2-mu^2)/8", "-h^2/8", "h*(3*h^2-mu^2)/(4*(h^2-mu^2))", "(3*h^2-mu^2)/(2*(h^2-mu^2))"],
    ])
}

pub fn p_plus_display() -> ScalarMatrix {
    matrix(&[
        &["(2*h+mu)/(4*mu)", "-h/(4*mu)", "(3/2*h+mu)/(mu*(h+mu))", "1/(mu*(h+mu))"],
        &["-(2*h+mu)/(4*mu)", "h/(4*mu)", "-(3/2*h+mu)/(mu*(h+mu))", "-1/(mu*(h+mu))"],
        &[
            "(-2*h^2+h*mu+mu^2)/(8*mu)",
            "h*(h-mu)/(8*mu)",
            "(-3*h^2+h*mu+2*mu^2)/(4*mu*(h+mu))",
            "(-h+mu)/(2*mu*(h+mu))",
        ],
        &["(-2*h^2+h*mu+mu^2)/16", "h*(h-mu)/16", "(-3*h^2+h*mu+2*mu^2)/(8*(h+mu))", "(-h+mu)/(4*(h+mu))"],
    ])
}

pub fn p_minus_display() -> ScalarMatrix {
    matrix(&[
        &["(-2*h+mu)/(4*mu)", "h/(4*mu)", "(3/2*h-mu)/(mu*(mu-h))", "1/(mu*(mu-h))"],
        &["(2*h-mu)/(4*mu)", "-h/(4*mu)", "(-3/2*h+mu)/(mu*(mu-h))", "-1/(mu*(mu-h))"],
        &[
            "(2*h^2+h*mu-mu^2)/(8*mu)",
            "-h*(h+mu)/(8*mu)",
            "(3*h^2+h*mu-2*mu^2)/(4*mu*(h-mu))",
            "(h+mu)/(2*mu*(h-mu))",
        ],
        &["(-2*h^2-h*mu+mu^2)/16", "h*(h+mu)/16", "(-3*h^2-h*mu+2*mu^2)/(8*(h-mu))", "-(h+mu)/(4*(h-mu))"],
    ])
}

/// Entries where two matrices differ.
pub fn diff_entries(a: &ScalarMatrix, b: &ScalarMatrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                out.push((i, j));
            }
        }
    }
    out
}
