import { describe, expect, it } from "vitest";

import {
  celsiusFromFahrenheit,
  displayTemperature,
  fahrenheitFromCelsius,
  parseTemperature,
} from "../src/convert.js";

describe("temperature conversion", () => {
  it("maps the reference points", () => {
    expect(fahrenheitFromCelsius(0)).toBe(32);
    expect(fahrenheitFromCelsius(18.5)).toBeCloseTo(65.3, 9);
    expect(celsiusFromFahrenheit(65.3)).toBeCloseTo(18.5, 9);
  });

  it("round-trips within 1e-9", () => {
    for (const c of [-40, -10.5, 0, 18.5, 37.2, 60]) {
      expect(celsiusFromFahrenheit(fahrenheitFromCelsius(c))).toBeCloseTo(c, 9);
    }
  });

  it("toggling the display unit preserves the canonical value", () => {
    const canonical = 65.3;
    const celsiusText = displayTemperature(canonical, "C");
    expect(Number(celsiusText)).toBeCloseTo(18.5, 6);
    const back = parseTemperature(celsiusText, "C");
    expect(back).toBeCloseTo(canonical, 6);
    expect(displayTemperature(canonical, "F")).toBe("65.3");
  });

  it("rejects unparsable text as NaN", () => {
    expect(parseTemperature("warm", "F")).toBeNaN();
  });
});
