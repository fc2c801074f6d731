/** State machine for the basis-check panel: run, re-run with a new seed,
 * surface network failures with a retry affordance. */

import { ApiClient } from "./api.js";
import type { VerifySwRequest, VerifySwResponse } from "./types.js";

export type PanelState =
  | { phase: "idle" }
  | { phase: "loading"; request: VerifySwRequest }
  | { phase: "ready"; request: VerifySwRequest; report: VerifySwResponse }
  | { phase: "error"; request: VerifySwRequest; message: string };

export class VerifyPanel {
  state: PanelState = { phase: "idle" };

  constructor(
    private readonly client: ApiClient,
    private readonly onChange: (state: PanelState) => void = () => {},
  ) {}

  private setState(state: PanelState): void {
    this.state = state;
    this.onChange(state);
  }

  async run(request: VerifySwRequest): Promise<PanelState> {
    this.setState({ phase: "loading", request });
    try {
      const report = await this.client.verifySw(request);
      this.setState({ phase: "ready", request, report });
    } catch (err) {
      this.setState({
        phase: "error",
        request,
        message: err instanceof Error ? err.message : String(err),
      });
    }
    return this.state;
  }

  /** Re-run with a fresh seed (new randomized samples, same variant). */
  rerun(seed: number): Promise<PanelState> {
    const current = this.state.phase === "idle"
      ? { variant: "winograd" as const, samples: 50, seed }
      : { ...this.state.request, seed };
    return this.run(current);
  }

  retry(): Promise<PanelState> {
    if (this.state.phase !== "error") {
      return Promise.resolve(this.state);
    }
    return this.run(this.state.request);
  }
}
