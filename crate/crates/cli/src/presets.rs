//! Named braidings and algebras.

use braided_core::hecke::Braiding;

use crate::InputError;

fn number(s: &str, what: &str) -> Result<usize, InputError> {
    let s = s.trim();
    let s = s.strip_prefix(what).and_then(|x| x.strip_prefix('=')).unwrap_or(s);
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(InputError::Invalid(format!("expected a positive integer for {what}, found '{s}'"))),
    }
}

/// `flip:d`, `P:m=d`, `std:d=n`, `superflip:m|n`.
pub fn braiding(name: &str) -> Result<Braiding, InputError> {
    let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
    match kind.trim() {
        "flip" => Ok(Braiding::flip(number(arg, "d")?)),
        "P" => Ok(Braiding::flip(number(arg, "m")?)),
        "std" => Ok(Braiding::standard(number(arg, "d")?)),
        "superflip" => {
            let (m, n) = arg
                .split_once('|')
                .ok_or_else(|| InputError::Invalid(format!("superflip needs 'm|n', found '{arg}'")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| InputError::Invalid(format!("bad size '{s}'")));
            let (m, n) = (parse(m)?, parse(n)?);
            if m + n == 0 {
                return Err(InputError::Invalid("superflip needs m + n > 0".into()));
            }
            Ok(Braiding::super_flip(m, n))
        }
        _ => Err(InputError::Invalid(format!("unknown braiding preset '{name}'"))),
    }
}

pub enum Algebra {
    /// U(u(2)_ℏ) with its derivatives.
    U2,
    /// The braided Weyl algebra of a braiding.
    Weyl(Braiding),
    /// U(gl(m)_ℏ), acting on itself by commutators.
    Ugl(usize),
}

/// `uu2`, `ugl:m`, `weyl:<braiding preset>`.
pub fn algebra(name: &str) -> Result<Algebra, InputError> {
    let name = name.trim();
    if name == "uu2" {
        return Ok(Algebra::U2);
    }
    if let Some(m) = name.strip_prefix("ugl:") {
        return Ok(Algebra::Ugl(number(m, "m")?));
    }
    if let Some(b) = name.strip_prefix("weyl:") {
        return Ok(Algebra::Weyl(braiding(b)?));
    }
    Err(InputError::Invalid(format!("unknown algebra '{name}' (expected uu2, ugl:m or weyl:<braiding>)")))
}
