"""Reference data for the 51 nonsingular small-step sets with an infinite group.

Each row carries the first nine excursion counts, the growth constant and
the exponent |alpha| as printed (six decimals), and the minimal polynomials
of rho and of the correlation coefficient c.  Step sets are not stored: they
are recovered by matching excursion sequences (see ``report``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .bigpoly import parse_poly

__all__ = ["Fixture", "FIXTURES", "TABLE2_GROUPS", "fixture", "group_of", "WORKED_EXAMPLE"]

# tag, starred (period 2), e_0..e_8, rho, |alpha|
_TABLE1 = [
    ("3", False, (1, 0, 1, 2, 2, 13, 21, 67, 231), "3.799605", "2.610604"),
    ("4", False, (1, 0, 0, 2, 2, 0, 16, 44, 28), "3.608079", "2.720448"),
    ("5", False, (1, 0, 1, 2, 2, 14, 21, 76, 252), "3.799605", "2.318862"),
    ("6", False, (1, 0, 1, 2, 2, 13, 21, 67, 231), "3.799605", "2.610604"),
    ("7", True, (1, 0, 1, 0, 4, 0, 29, 0, 230), "3.800378", "2.521116"),
    ("8", False, (1, 0, 1, 1, 2, 7, 10, 38, 89), "3.799605", "3.637724"),
    ("9", False, (1, 0, 1, 1, 2, 7, 10, 38, 89), "3.799605", "3.637724"),
    ("10", False, (1, 0, 0, 1, 2, 0, 5, 26, 28), "3.608079", "3.388025"),
    ("11", True, (1, 0, 0, 0, 2, 0, 6, 0, 42), "3.800378", "3.918957"),
    ("12", False, (1, 0, 0, 1, 0, 1, 5, 1, 18), "3.799605", "5.136154"),
    ("14", False, (1, 0, 0, 1, 2, 0, 5, 26, 28), "3.608079", "3.388025"),
    ("16", False, (1, 0, 1, 2, 2, 14, 21, 76, 252), "3.799605", "2.318862"),
    ("17", True, (1, 0, 1, 0, 4, 0, 29, 0, 230), "3.800378", "2.521116"),
    ("18", False, (1, 0, 0, 2, 2, 0, 16, 44, 28), "3.608079", "2.720448"),
    ("19", True, (1, 0, 0, 0, 2, 0, 6, 0, 42), "3.800378", "3.918957"),
    ("20", False, (1, 0, 1, 2, 4, 14, 45, 120, 468), "4.372923", "2.482876"),
    ("21", False, (1, 0, 1, 1, 4, 7, 25, 64, 201), "4.214757", "3.347502"),
    ("23", False, (1, 0, 2, 1, 10, 14, 75, 178, 738), "4.729032", "3.320192"),
    ("24", False, (1, 0, 2, 2, 10, 26, 86, 312, 1022), "4.729032", "2.757466"),
    ("25", False, (1, 0, 2, 2, 11, 27, 101, 348, 1237), "4.729032", "2.397625"),
    ("26", False, (1, 0, 2, 2, 11, 27, 101, 348, 1237), "4.729032", "2.397625"),
    ("27", True, (1, 0, 2, 0, 13, 0, 124, 0, 1427), "4.569086", "2.503534"),
    ("28", False, (1, 0, 1, 2, 4, 13, 36, 111, 343), "4.214757", "2.742114"),
    ("29", True, (1, 0, 1, 0, 5, 0, 35, 0, 313), "4.569086", "3.985964"),
    ("30", False, (1, 0, 1, 1, 6, 17, 58, 202, 749), "5", "2.722859"),
    ("31", False, (1, 0, 0, 1, 2, 1, 11, 27, 60), "4.372923", "4.070925"),
    ("32", True, (1, 0, 2, 0, 13, 0, 124, 0, 1427), "4.569086", "2.503534"),
    ("33", False, (1, 0, 1, 1, 4, 7, 25, 64, 201), "4.214757", "3.347502"),
    ("34", True, (1, 0, 1, 0, 5, 0, 35, 0, 313), "4.569086", "3.985964"),
    ("35", False, (1, 0, 1, 1, 3, 8, 19, 65, 177), "4.729032", "4.514931"),
    ("36", False, (1, 0, 0, 1, 2, 1, 11, 27, 60), "4.372923", "4.070925"),
    ("37", False, (1, 0, 1, 2, 4, 13, 36, 111, 343), "4.214757", "2.742114"),
    ("38", False, (1, 0, 2, 2, 10, 26, 86, 312, 1022), "4.729032", "2.757466"),
    ("39", False, (1, 0, 1, 1, 3, 8, 19, 65, 177), "4.729032", "4.514931"),
    ("40", False, (1, 0, 0, 2, 4, 8, 28, 108, 372), "5", "3.383396"),
    ("41", False, (1, 0, 1, 2, 4, 14, 45, 120, 468), "4.372923", "2.482876"),
    ("42", False, (1, 0, 0, 2, 4, 8, 28, 108, 372), "5", "3.383396"),
    ("43", False, (1, 0, 2, 2, 13, 27, 140, 392, 1882), "5.064419", "2.491053"),
    ("44", False, (1, 0, 2, 3, 15, 51, 208, 893, 3841), "5.891838", "2.679783"),
    ("45", False, (1, 0, 1, 1, 5, 8, 40, 91, 406), "5.064419", "4.036441"),
    ("46", False, (1, 0, 1, 2, 8, 22, 101, 364, 1618), "5.799605", "2.959600"),
    ("47", False, (1, 0, 1, 3, 7, 29, 101, 404, 1657), "5.891838", "3.471058"),
    ("48", False, (1, 0, 1, 1, 5, 8, 40, 91, 406), "5.064419", "4.036441"),
    ("49", False, (1, 0, 2, 2, 13, 27, 140, 392, 1882), "5.064419", "2.491053"),
    ("50", False, (1, 0, 2, 3, 15, 51, 208, 893, 3841), "5.891838", "2.679783"),
    ("51", False, (1, 0, 1, 3, 7, 29, 101, 404, 1657), "5.891838", "3.471058"),
    ("52", False, (1, 0, 1, 1, 8, 18, 90, 301, 1413), "5.799605", "3.042101"),
    ("53", False, (1, 0, 1, 2, 8, 22, 101, 364, 1618), "5.799605", "2.959600"),
    ("54", False, (1, 0, 3, 5, 30, 111, 548, 2586, 13087), "6.729032", "2.667986"),
    ("55", False, (1, 0, 2, 4, 16, 64, 266, 1210, 5630), "6.729032", "3.497037"),
    ("56", False, (1, 0, 2, 4, 16, 64, 266, 1210, 5630), "6.729032", "3.497037"),
]

# group label, member tags, mu_rho, mu_c; None repeats the entry of the row above
_TABLE2 = [
    ("12", ("12",), "t^4+t^3-8*t^2-36*t-11", "t^4+9/2*t^3+27/4*t^2+35/8*t+17/16"),
    ("(5,16)", ("5", "16"), None, "t^4-9/2*t^3+27/4*t^2-35/8*t+17/16"),
    ("(3,6)", ("3", "6"), None, "t^8+1/4*t^6-3/16*t^4+3/64*t^2-1/256"),
    ("(8,9)", ("8", "9"), None, None),
    ("(7,17)", ("7", "17"), "t^6-11*t^4-32*t^2-256", "t^6+3/4*t^4+2*t^2-1/2"),
    ("(11,19)", ("11", "19"), None, None),
    ("(4,18)", ("4", "18"), "t^5+t^4+t^3-30*t^2-96*t-91", "t^10+2*t^8+t^6-1/64*t^4+3/256*t^2-1/1024"),
    ("(10,14)", ("10", "14"), None, None),
    ("(20,41)", ("20", "41"), "t^5-2*t^4-4*t^3-31*t^2+23*t-41",
     "t^10+t^8+157/32*t^6+145/128*t^4+1681/512*t^2-2209/2048"),
    ("(31,36)", ("31", "36"), None, None),
    ("(21,33)", ("21", "33"), "t^5+2*t^4-7*t^3-46*t^2-116*t-131",
     "t^10+3/2*t^8+13/16*t^6+5/64*t^4+3/256*t^2-1/1024"),
    ("(28,37)", ("28", "37"), None, None),
    ("23", ("23",), "t^3+t^2-18*t-43", "t^3+t^2+3/4*t+1/8"),
    ("(24,38)", ("24", "38"), None, "t^3-t^2+3/4*t-1/8"),
    ("(25,26)", ("25", "26"), None, "t^6-t^4+7/16*t^2-5/64"),
    ("(35,39)", ("35", "39"), None, None),
    ("(27,32)", ("27", "32"), "t^6-20*t^4-16*t^2-48", "t^6+2*t^4+5/2*t^2-3/4"),
    ("(29,34)", ("29", "34"), None, None),
    ("30", ("30",), "t-5", "t-1/4"),
    ("(40,42)", ("40", "42"), None, "t+1/4"),
    ("(43,49)", ("43", "49"), "t^6+2*t^5-18*t^4-67*t^3-108*t^2-40*t-19",
     "t^12+11/4*t^10+107/16*t^8+145/32*t^6+455/128*t^4-2859/1024*t^2+1521/4096"),
    ("(45,48)", ("45", "48"), None, None),
    ("(44,50)", ("44", "50"), "t^7+3*t^6-18*t^5-127*t^4-328*t^3-560*t^2-704*t-448",
     "t^14+23/4*t^12+25/2*t^10+971/64*t^8+421/32*t^6+307/64*t^4+107/64*t^2-49/256"),
    ("(47,51)", ("47", "51"), None, None),
    ("52", ("52",), "t^4-7*t^3+10*t^2-24*t+37", "t^4+1/2*t^3+55/4*t^2+19/8*t+1/16"),
    ("(46,53)", ("46", "53"), None, "t^4-1/2*t^3+55/4*t^2-19/8*t+1/16"),
    ("54", ("54",), "t^3-5*t^2-10*t-11", "t^3+11/4*t-7/8"),
    ("(55,56)", ("55", "56"), None, "t^3+11/4*t+7/8"),
]

# rows where a new block starts (blank entries never cross these)
_BLOCK_STARTS = {"12", "(7,17)", "(4,18)", "(20,41)", "(21,33)", "23", "(27,32)", "30", "(43,49)", "(44,50)", "52", "54"}


@dataclass(frozen=True)
class Fixture:
    tag: str
    starred: bool
    sequence: tuple
    rho_decimal: str
    alpha_decimal: str
    group: str
    mu_rho_text: str
    mu_c_text: str

    @property
    def label(self):
        return self.tag + ("*" if self.starred else "")

    @property
    def mu_rho(self):
        return parse_poly(self.mu_rho_text)

    @property
    def mu_c(self):
        """mu_c with denominators cleared."""
        return parse_poly(self.mu_c_text)


def _expand_table2():
    rows = []
    last_rho = last_c = None
    for label, members, mu_rho, mu_c in _TABLE2:
        if label in _BLOCK_STARTS:
            last_rho = last_c = None
        last_rho = mu_rho or last_rho
        last_c = mu_c or last_c
        if last_rho is None or last_c is None:
            raise AssertionError(f"blank entry without a value above it at {label}")
        rows.append((label, members, last_rho, last_c))
    return rows


TABLE2_GROUPS = {label: (members, rho, c) for label, members, rho, c in _expand_table2()}


def _build():
    by_tag = {}
    for label, (members, rho, c) in TABLE2_GROUPS.items():
        for m in members:
            by_tag[m] = (label, rho, c)
    out = {}
    for tag, starred, seq, rho_dec, alpha_dec in _TABLE1:
        label, rho, c = by_tag[tag]
        out[tag] = Fixture(tag, starred, seq, rho_dec, alpha_dec, label, rho, c)
    return out


FIXTURES = _build()


def fixture(tag):
    return FIXTURES[str(tag).rstrip("*")]


def group_of(tag):
    return FIXTURES[str(tag).rstrip("*")].group


# the worked example: ten printed digits for rho and alpha, and the transformed polynomial
WORKED_EXAMPLE = {
    "steps": "(-1,0),(0,1),(1,0),(1,-1),(0,-1)",
    "tag": "23",
    "chi_x": "x^2*y+x^2-y",
    "chi_y": "y^2-x-1",
    "rho_eliminant_factor": "t^4+2*t^3-17*t^2-61*t-43",
    "c_eliminant_factors": ("4*t^2+1", "8*t^3+8*t^2+6*t+1", "8*t^3-8*t^2+6*t-1"),
    "mu_c_cleared": "8*t^3+8*t^2+6*t+1",
    "transformed": "x^6+2*x^5+6*x^4+5*x^3+6*x^2+2*x+1",
    "rho": "4.729031538",
    "alpha": "-3.320191962",
}

