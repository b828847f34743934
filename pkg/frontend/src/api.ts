/** Typed client for the question-answering service's /v1 endpoints. */

export interface AnswerEntry {
  pid: number;
  sid: number;
  text: string;
  feedback_score: number;
  matched_terms: number;
  likes: number;
  dislikes: number;
}

export interface AskResponse {
  question_class: string;
  answer_types: string[];
  terms: string[];
  answers: AnswerEntry[];
}

export interface FeedbackAck {
  likes: number;
  dislikes: number;
}

export type Vote = "like" | "dislike";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Error carrying the service's machine-readable code (e.g. empty_query). */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function post<T>(fetchImpl: FetchLike, url: string, body: unknown): Promise<T> {
  const response = await fetchImpl(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!response.ok) {
    let code = "http_error";
    let message = `HTTP ${response.status}`;
    try {
      const payload = (await response.json()) as { code?: string; message?: string };
      if (payload.code) code = payload.code;
      if (payload.message) message = payload.message;
    } catch {
      // non-JSON error body; keep the defaults
    }
    throw new ApiError(code, response.status, message);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  ask(question: string): Promise<AskResponse> {
    return post<AskResponse>(this.fetchImpl, `${this.baseUrl}/v1/ask`, { question });
  }

  sendFeedback(pid: number, sid: number, vote: Vote): Promise<FeedbackAck> {
    return post<FeedbackAck>(this.fetchImpl, `${this.baseUrl}/v1/feedback`, {
      pid,
      sid,
      vote,
    });
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.baseUrl}/v1/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
