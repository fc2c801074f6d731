/** Typed client for the engine's HTTP API.
 *
 * At most one compute request is considered current at a time: each call
 * takes a token, and responses arriving after a newer request started are
 * discarded by the caller via isCurrent().
 */

import type {
  ApiErrorBody,
  ComputeRequest,
  ComputeResponse,
  MethodsResponse,
  VerifySwRequest,
  VerifySwResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private requestToken = 0;

  constructor(
    private readonly baseUrl = "/api/v1",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  nextToken(): number {
    this.requestToken += 1;
    return this.requestToken;
  }

  /** True when no newer request has been started since `token`. */
  isCurrent(token: number): boolean {
    return token === this.requestToken;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    if (!response.ok) {
      let code = "HttpError";
      let message = `${response.status}`;
      try {
        const parsed = JSON.parse(text) as ApiErrorBody;
        code = parsed.error ?? code;
        message = parsed.message ?? message;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return JSON.parse(text) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  methods(): Promise<MethodsResponse> {
    return this.request("GET", "/methods");
  }

  compute(body: ComputeRequest): Promise<ComputeResponse> {
    return this.request("POST", "/compute", body);
  }

  verifySw(body: VerifySwRequest): Promise<VerifySwResponse> {
    return this.request("POST", "/verify-sw", body);
  }
}
