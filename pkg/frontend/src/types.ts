/**
 * Wire types for the decision service's /v1 HTTP interface.
 *
 * These mirror the JSON bodies exchanged with the backend exactly; the
 * front end never computes weights, consistency figures, or rankings
 * itself — every number shown on screen originates from one of these
 * payloads.
 */

/** A criterion node in the hierarchy; leaves carry an empty children list. */
export interface CriterionWire {
    id: string;
    name: string;
    children: CriterionWire[];
}

/** A decision alternative scored under every leaf criterion. */
export interface AlternativeWire {
    id: string;
    name: string;
}

/** One pairwise judgment between members i and j of a comparison set. */
export interface JudgmentEntryWire {
    i: number;
    j: number;
    /** Canonical ratio as a rational string, e.g. "5" or "1/5". */
    value: string;
}

/** Derivation settings block of the model document. */
export interface SettingsWire {
    method: "eigenvector" | "geometric_mean";
    tolerance: number;
    max_iterations: number;
    cr_threshold: number;
}

/** The persistable model document POSTed to /v1/models. */
export interface ModelDocumentWire {
    version: number;
    goal: string;
    criteria: CriterionWire[];
    alternatives: AlternativeWire[];
    judgments: Record<string, JudgmentEntryWire[]>;
    settings: SettingsWire;
}

/** Consistency report for one fully judged comparison set. */
export interface ReportWire {
    n: number;
    lambda_max: number;
    ci: number;
    ri: number;
    cr: number;
    threshold: number;
    consistent: boolean;
    worst_pair: { i: number; j: number; suggested_value: string } | null;
}

/** Response to POST /v1/models (201). */
export interface CreateModelResponse {
    model_id: string;
    revision: number;
    status: string;
}

/** A comparison set still missing judgments. */
export interface IncompleteNodeWire {
    node: string;
    missing: [number, number][];
}

/** Response to GET /v1/models/{id}. */
export interface ModelResponse {
    model_id: string;
    revision: number;
    document: ModelDocumentWire;
    incomplete: IncompleteNodeWire[];
}

/** Response to PUT /v1/models/{id}/judgments/{node}. */
export interface PutJudgmentsResponse {
    model_id: string;
    revision: number;
    node: string;
    report: ReportWire | null;
    missing_pairs: [number, number][];
}

/** Response to GET /v1/models/{id}/consistency. */
export interface ConsistencyResponse {
    model_id: string;
    revision: number;
    reports: Record<string, ReportWire>;
    incomplete: IncompleteNodeWire[];
    consistent: boolean;
}

/** One leaf row of the global weight table. */
export interface GlobalWeightRowWire {
    criterion: string;
    sub_criterion: string;
    leaf_id: string;
    global_weight: number;
}

/** Response to GET /v1/models/{id}/synthesis. */
export interface SynthesisResponse {
    model_id: string;
    revision: number;
    global_weights: GlobalWeightRowWire[];
    scores: Record<string, number>;
    ranking: string[];
    ties: string[][];
    reports: Record<string, ReportWire>;
    warning?: { code: string; message: string; nodes: string[] };
}

/** One grid point of a sensitivity sweep. */
export interface SweepPointWire {
    weight: number;
    scores: Record<string, number>;
    ranking: string[];
}

/** Response to GET /v1/models/{id}/sensitivity. */
export interface SensitivityResponse {
    target_node: string;
    points: SweepPointWire[];
    /** Swept weights at which the top alternative changes. */
    reversals: number[];
}

/** Response to GET /v1/ri. */
export interface RiResponse {
    n: number;
    samples: number;
    seed: number;
    estimate: number;
    table: number;
    difference: number;
}

/** Error envelope returned with 4xx statuses. */
export interface ErrorBody {
    error: {
        code: string;
        message: string;
        path?: string;
        line?: number;
        column?: number;
        defects?: unknown[];
        current_revision?: number;
        nodes?: string[];
    };
}
