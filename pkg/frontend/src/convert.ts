/**
 * Temperature unit conversion for the wet-bulb widget.
 *
 * Fahrenheit is canonical everywhere (form state, requests); Celsius exists
 * only at this widget boundary. Toggling the unit converts the displayed
 * number and back without touching the stored value.
 */

export function fahrenheitFromCelsius(c: number): number {
  return (c * 9) / 5 + 32;
}

export function celsiusFromFahrenheit(f: number): number {
  return ((f - 32) * 5) / 9;
}

/** Displayed text for a canonical F value in the chosen unit. */
export function displayTemperature(canonicalF: number, unit: "F" | "C"): string {
  const value = unit === "F" ? canonicalF : celsiusFromFahrenheit(canonicalF);
  return String(Math.round(value * 1e6) / 1e6);
}

/** Canonical F value for text typed in the chosen unit; NaN when unparsable. */
export function parseTemperature(text: string, unit: "F" | "C"): number {
  const value = Number(text);
  if (!Number.isFinite(value)) return NaN;
  return unit === "F" ? value : fahrenheitFromCelsius(value);
}
