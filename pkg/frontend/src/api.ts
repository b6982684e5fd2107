/**
 * Typed HTTP client for the decision service's /v1 interface.
 *
 * Every call keeps the raw response text alongside the parsed body so
 * callers can verify that rendered figures match the service's own
 * serialization. Errors carry the backend's structured error envelope.
 */

import type {
    ConsistencyResponse,
    CreateModelResponse,
    ErrorBody,
    JudgmentEntryWire,
    ModelDocumentWire,
    ModelResponse,
    PutJudgmentsResponse,
    RiResponse,
    SensitivityResponse,
    SynthesisResponse,
} from "./types.js";

/** Parsed body plus the exact bytes the service sent. */
export interface ApiReply<T> {
    data: T;
    raw: string;
    status: number;
}

/** Raised for any non-2xx response, with the backend's error envelope. */
export class ApiError extends Error {
    readonly status: number;
    readonly body: ErrorBody["error"] | null;

    constructor(status: number, body: ErrorBody["error"] | null, raw: string) {
        super(body ? `${body.code}: ${body.message}` : `HTTP ${status}: ${raw}`);
        this.name = "ApiError";
        this.status = status;
        this.body = body;
    }
}

function parseError(status: number, raw: string): ApiError {
    let body: ErrorBody["error"] | null = null;
    try {
        const parsed = JSON.parse(raw) as Partial<ErrorBody>;
        if (parsed && typeof parsed === "object" && parsed.error) {
            body = parsed.error;
        }
    } catch {
        body = null;
    }
    return new ApiError(status, body, raw);
}

export class ApiClient {
    readonly baseUrl: string;
    /** Raw text of the most recent successful response, for display checks. */
    lastRaw: string | null = null;

    constructor(baseUrl: string) {
        this.baseUrl = baseUrl.replace(/\/+$/, "");
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<ApiReply<T>> {
        const init: RequestInit = { method };
        if (body !== undefined) {
            init.body = JSON.stringify(body);
            init.headers = { "content-type": "application/json" };
        }
        const response = await fetch(this.baseUrl + path, init);
        const raw = await response.text();
        if (!response.ok) {
            throw parseError(response.status, raw);
        }
        this.lastRaw = raw;
        return { data: JSON.parse(raw) as T, raw, status: response.status };
    }

    health(): Promise<ApiReply<{ status: string; version: string }>> {
        return this.request("GET", "/v1/health");
    }

    createModel(document: ModelDocumentWire): Promise<ApiReply<CreateModelResponse>> {
        return this.request("POST", "/v1/models", document);
    }

    getModel(modelId: string): Promise<ApiReply<ModelResponse>> {
        return this.request("GET", `/v1/models/${encodeURIComponent(modelId)}`);
    }

    putJudgments(
        modelId: string,
        nodeId: string,
        entries: JudgmentEntryWire[],
        ifRevision: number,
    ): Promise<ApiReply<PutJudgmentsResponse>> {
        const path = `/v1/models/${encodeURIComponent(modelId)}/judgments/` +
            `${encodeURIComponent(nodeId)}?if_revision=${ifRevision}`;
        return this.request("PUT", path, entries);
    }

    consistency(modelId: string): Promise<ApiReply<ConsistencyResponse>> {
        return this.request("GET", `/v1/models/${encodeURIComponent(modelId)}/consistency`);
    }

    synthesis(modelId: string): Promise<ApiReply<SynthesisResponse>> {
        return this.request("GET", `/v1/models/${encodeURIComponent(modelId)}/synthesis`);
    }

    sensitivity(modelId: string, node: string, steps = 100): Promise<ApiReply<SensitivityResponse>> {
        const path = `/v1/models/${encodeURIComponent(modelId)}/sensitivity` +
            `?node=${encodeURIComponent(node)}&steps=${steps}`;
        return this.request("GET", path);
    }

    randomIndex(n: number, samples = 100000, seed = 0): Promise<ApiReply<RiResponse>> {
        return this.request("GET", `/v1/ri?n=${n}&samples=${samples}&seed=${seed}`);
    }
}

/**
 * Render a service-sourced number exactly as JSON serializes it, so the
 * string shown on screen is the same token the wire carried.
 */
export function wireNumber(value: number): string {
    return JSON.stringify(value);
}
