use std::fmt;

use crate::algebra::Sign;

/// Orientation of a strand end on a slice boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// `v`: the strand runs downwards; boundary colour `g` reads as `g`.
    Down,
    /// `^`: the strand runs upwards; boundary colour `g` reads as `g*`.
    Up,
}

impl Orientation {
    pub fn symbol(self) -> char {
        match self {
            Orientation::Down => 'v',
            Orientation::Up => '^',
        }
    }

    pub fn from_symbol(c: &str) -> Option<Orientation> {
        match c {
            "v" => Some(Orientation::Down),
            "^" => Some(Orientation::Up),
            _ => None,
        }
    }

    /// The word sign carried by a boundary point with this orientation.
    pub fn sign(self) -> Sign {
        match self {
            Orientation::Down => Sign::Plain,
            Orientation::Up => Sign::Starred,
        }
    }
}

pub fn signature_string(sig: &[Orientation]) -> String {
    if sig.is_empty() {
        return "(empty)".to_owned();
    }
    sig.iter().map(|o| o.symbol().to_string()).collect::<Vec<_>>().join(" ")
}

/// The elementary pieces of a slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    IdDown,
    IdUp,
    /// Positive crossing: over strand enters top-right, leaves bottom-left.
    XPlus,
    /// Negative crossing: over strand enters top-left, leaves bottom-right.
    XMinus,
    /// Cap with top `v ^`.
    CapLR,
    /// Cap with top `^ v`.
    CapRL,
    /// Cup with bottom `^ v`.
    CupLR,
    /// Cup with bottom `v ^`.
    CupRL,
}

use Orientation::{Down, Up};

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::IdDown,
        Generator::IdUp,
        Generator::XPlus,
        Generator::XMinus,
        Generator::CapLR,
        Generator::CapRL,
        Generator::CupLR,
        Generator::CupRL,
    ];

    pub fn top(self) -> &'static [Orientation] {
        match self {
            Generator::IdDown => &[Down],
            Generator::IdUp => &[Up],
            Generator::XPlus | Generator::XMinus => &[Down, Down],
            Generator::CapLR => &[Down, Up],
            Generator::CapRL => &[Up, Down],
            Generator::CupLR | Generator::CupRL => &[],
        }
    }

    pub fn bottom(self) -> &'static [Orientation] {
        match self {
            Generator::IdDown => &[Down],
            Generator::IdUp => &[Up],
            Generator::XPlus | Generator::XMinus => &[Down, Down],
            Generator::CapLR | Generator::CapRL => &[],
            Generator::CupLR => &[Up, Down],
            Generator::CupRL => &[Down, Up],
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Generator::IdDown => "id+",
            Generator::IdUp => "id-",
            Generator::XPlus => "x+",
            Generator::XMinus => "x-",
            Generator::CapLR => "cap>",
            Generator::CapRL => "cap<",
            Generator::CupLR => "cup>",
            Generator::CupRL => "cup<",
        }
    }

    pub fn from_token(tok: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.token() == tok)
    }

    pub fn is_identity(self) -> bool {
        matches!(self, Generator::IdDown | Generator::IdUp)
    }

    pub fn identity_for(o: Orientation) -> Generator {
        match o {
            Down => Generator::IdDown,
            Up => Generator::IdUp,
        }
    }

    /// +1 for `XPlus`, −1 for `XMinus`, 0 otherwise.
    pub fn crossing_sign(self) -> i32 {
        match self {
            Generator::XPlus => 1,
            Generator::XMinus => -1,
            _ => 0,
        }
    }

    /// Swap the two crossing kinds; everything else is fixed.
    pub fn mirrored(self) -> Generator {
        match self {
            Generator::XPlus => Generator::XMinus,
            Generator::XMinus => Generator::XPlus,
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}
