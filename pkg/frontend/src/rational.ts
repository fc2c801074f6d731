/** Exact rational cell parsing, mirroring the server's grammar.
 *
 * Accepted forms (surrounding whitespace allowed): "p", "p/q" with q != 0,
 * and decimal literals with an optional exponent ("0.25", ".5", "2.",
 * "1.5e-2").  This is validation only; the UI never computes with the
 * values, it just normalizes them for display and payloads.
 */

export interface ParsedRational {
  num: bigint;
  den: bigint; // always > 0
}

const FRACTION_RE = /^([+-]?)(\d+)\/(\d+)$/;
const DECIMAL_RE = /^([+-]?)(?=\d|\.\d)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$/;

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

function normalize(num: bigint, den: bigint): ParsedRational {
  if (den === 0n) {
    throw new Error("zero denominator");
  }
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  if (num === 0n) {
    return { num: 0n, den: 1n };
  }
  const g = gcd(num, den);
  return { num: num / g, den: den / g };
}

/** Parse a cell string; returns null when it is not a valid exact literal. */
export function parseCell(text: string): ParsedRational | null {
  const trimmed = text.trim();
  const asFraction = FRACTION_RE.exec(trimmed);
  if (asFraction) {
    const [, sign, p, q] = asFraction;
    if (BigInt(q) === 0n) {
      return null; // zero denominator is rejected, like the server
    }
    const num = BigInt(p) * (sign === "-" ? -1n : 1n);
    return normalize(num, BigInt(q));
  }
  const asDecimal = DECIMAL_RE.exec(trimmed);
  if (asDecimal) {
    const [, sign, whole, frac = "", exp] = asDecimal;
    let num = BigInt((whole || "0") + frac);
    let den = 10n ** BigInt(frac.length);
    if (exp !== undefined) {
      const e = BigInt(exp);
      if (e >= 0n) {
        num *= 10n ** e;
      } else {
        den *= 10n ** -e;
      }
    }
    if (sign === "-") {
      num = -num;
    }
    return normalize(num, den);
  }
  return null;
}

/** Canonical "p" / "p/q" form, identical to the server's formatting. */
export function formatRational(value: ParsedRational): string {
  return value.den === 1n ? value.num.toString() : `${value.num}/${value.den}`;
}

/** Validate-and-normalize in one go; null means invalid. */
export function canonicalize(text: string): string | null {
  const parsed = parseCell(text);
  return parsed === null ? null : formatRational(parsed);
}
