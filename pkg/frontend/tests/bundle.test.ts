// The form must take every piece of vocabulary from the API. If any
// characteristic name sneaks into the shipped sources, this fails.
import { readFileSync, readdirSync } from "node:fs";
import { fileURLToPath } from "node:url";
import path from "node:path";
import { describe, expect, it } from "vitest";

const FRONTEND = path.resolve(path.dirname(fileURLToPath(import.meta.url)), "..");

const VOCABULARY = [
  "Factory Automation",
  "Building Automation",
  "Energy",
  "Monitoring",
  "Control",
  "Simulation",
  "Re-usability",
  "Capacity To Host agents",
  "Time behaviour",
  "Scalability",
];

describe("shipped sources carry no vocabulary", () => {
  const shipped = [
    path.join(FRONTEND, "index.html"),
    ...readdirSync(path.join(FRONTEND, "src")).map((name) => path.join(FRONTEND, "src", name)),
  ];

  for (const file of shipped) {
    it(path.relative(FRONTEND, file), () => {
      const text = readFileSync(file, "utf-8");
      for (const word of VOCABULARY) {
        // names would have to appear as string literals to be hard-coded
        for (const quote of ['"', "'", "`"]) {
          expect(text).not.toContain(quote + word + quote);
        }
        if (word.includes(" ")) {
          expect(text).not.toContain(word);
        }
      }
    });
  }
});
