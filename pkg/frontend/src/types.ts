// Wire types mirroring the service's JSON payloads.

export type EmotionChoice = "first" | "second" | "same";
export type ParaphraseMode = "sister" | "hyponym";
export type Presentation = "forward" | "swapped";

export interface SynsetView {
  key: string;
  id: string;
  pos: string;
  lemmas: string[];
  gloss: string;
  examples: string[];
  hypernyms: string[];
  hyponyms: string[];
}

export interface CommonHypernymView {
  ancestor: string;
  hopsFirst: number;
  hopsSecond: number;
}

export interface SpecificityView {
  verdict: string;
  case: string;
  chain?: string[];
  lch?: CommonHypernymView[];
  chosen?: CommonHypernymView;
}

export interface RecordView {
  recordId: string;
  kind: string;
  term1: string;
  sentence1: string;
  term2: string;
  sentence2: string;
  annotatorLabels: Record<string, string>;
  goldEmotion: string | null;
  valid: boolean;
  invalidReason: string | null;
  specificity: SpecificityView | null;
}

export interface MutationResult {
  schemaVersion: number;
  seq: number;
  record: RecordView;
}

export interface AlphaEntry {
  status: "ok" | "undefined" | "insufficient_data";
  value: number | null;
}

export interface EmotionKindEntry {
  n: number;
  counts: Record<string, number>;
  unadjudicated: number;
  alpha: AlphaEntry;
}

export interface ReportView {
  schemaVersion: number;
  release: string;
  counts: {
    total: number;
    byKind: Record<string, number>;
    specificityTested: number;
    valid: number;
    invalid: number;
    invalidReasons: Record<string, number>;
  };
  specificityDistribution: Record<string, number>;
  caseSplit: Record<string, number>;
  crossTab: {
    merged: Record<string, Record<string, number>>;
    unmerged: Record<string, Record<string, number>>;
  };
  conditionalRates: Record<string, { numerator: number; denominator: number }>;
  emotionByKind: Record<string, EmotionKindEntry>;
  invalidRecords: { recordId: string; reason: string }[];
  presentation: {
    specificityDistributionPct: Record<string, string>;
    caseSplitPct: Record<string, string>;
    crossTabPct: Record<string, Record<string, string>>;
    conditionalRatesPct: Record<string, string>;
    emotionByKindPct: Record<string, Record<string, string>>;
    emotionDeltasVsLiteral: Record<string, string>;
  };
}

/** The blinded projection handed to the labeling view: sentences only. */
export interface LabelingPair {
  recordId: string;
  sentence1: string;
  sentence2: string;
}

export function senseKeyLemma(key: string): string {
  const parts = key.split(".");
  return parts.slice(0, -2).join(".");
}

export function senseKeyPos(key: string): string {
  const parts = key.split(".");
  return parts[parts.length - 2];
}
