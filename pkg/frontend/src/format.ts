/**
 * Render a float exactly the way the service serializes it: 17 significant
 * digits, trailing zeros trimmed, and a ".0" kept on integral values.
 *
 * The UI never does score arithmetic, so every number it shows must be the
 * same text the API sent. Reproducing the encoding here (instead of, say,
 * rounding to two decimals) is what makes that byte-for-byte true.
 */
export function wireFloat(value: number): string {
  if (!Number.isFinite(value)) {
    throw new Error(`non-finite number in a response: ${value}`);
  }
  let text = value.toPrecision(17);
  if (text.includes("e") || text.includes("E")) {
    const [mantissa, exponent] = text.split(/[eE]/);
    let m = mantissa;
    if (m.includes(".")) {
      m = m.replace(/0+$/, "").replace(/\.$/, "");
    }
    const sign = exponent.startsWith("-") ? "-" : "+";
    const digits = exponent.replace(/^[+-]/, "").padStart(2, "0");
    return `${m}e${sign}${digits}`;
  }
  if (text.includes(".")) {
    text = text.replace(/0+$/, "");
    if (text.endsWith(".")) {
      text += "0";
    }
  } else {
    text += ".0";
  }
  return text;
}
