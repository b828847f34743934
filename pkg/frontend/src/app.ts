/** Single-page UI: question box, query details strip, answer cards with votes.
 *
 * The card list is rendered exactly in the order the server returns it; the
 * client never re-sorts. Each click maps to exactly one API call, votes are
 * disabled while in flight, and a newer ask cancels rendering of any older
 * response that is still pending.
 */
import { AnswerEntry, ApiClient, ApiError, FetchLike, Vote } from "./api.js";

export interface AppOptions {
  baseUrl?: string;
  fetchImpl?: FetchLike;
}

const CLASS_GUIDANCE =
  "Start your question with Who, What, Where, When, Which, Why or How.";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function chipRow(label: string, values: string[], kind: string): HTMLElement {
  const row = el("div", "chip-row");
  row.appendChild(el("span", "chip-label", label));
  for (const value of values) {
    row.appendChild(el("span", `chip chip-${kind}`, value));
  }
  return row;
}

export class App {
  private readonly client: ApiClient;
  private readonly form: HTMLFormElement;
  private readonly input: HTMLInputElement;
  private readonly details: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly cards: HTMLElement;
  private readonly toast: HTMLElement;
  private askSeq = 0;
  private lastQuestion = "";

  constructor(root: HTMLElement, options: AppOptions = {}) {
    this.client = new ApiClient(options.baseUrl ?? "", options.fetchImpl);

    this.form = el("form", "ask-form");
    this.input = el("input", "ask-input");
    this.input.type = "text";
    this.input.placeholder = "Who is the President of USA";
    this.input.setAttribute("aria-label", "question");
    const button = el("button", "ask-button", "Ask");
    button.type = "submit";
    this.form.append(this.input, button);

    this.banner = el("div", "banner");
    this.banner.hidden = true;
    this.details = el("div", "query-details");
    this.cards = el("div", "cards");
    this.toast = el("div", "toast");
    this.toast.hidden = true;

    this.form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitQuestion(this.input.value);
    });

    root.append(this.form, this.banner, this.details, this.cards, this.toast);
  }

  /** Ask the service and render the response; stale responses are dropped. */
  async submitQuestion(question: string): Promise<void> {
    const trimmed = question.trim();
    if (!trimmed) return;
    this.lastQuestion = trimmed;
    const seq = ++this.askSeq;
    this.banner.hidden = true;

    try {
      const response = await this.client.ask(trimmed);
      if (seq !== this.askSeq) return; // a newer ask superseded this one
      this.renderDetails(response.question_class, response.answer_types, response.terms);
      this.renderCards(response.answers);
    } catch (error) {
      if (seq !== this.askSeq) return;
      if (error instanceof ApiError && error.status === 400) {
        const guidance =
          error.code === "unsupported_question_class"
            ? CLASS_GUIDANCE
            : error.code === "empty_query"
              ? "That question has no searchable words left; add a few content words."
              : error.message;
        this.renderInlineGuidance(guidance);
      } else {
        this.renderRetryBanner();
      }
    }
  }

  private renderDetails(questionClass: string, answerTypes: string[], terms: string[]): void {
    this.details.replaceChildren(
      chipRow("class", [questionClass], "class"),
      chipRow("answer types", answerTypes, "type"),
      chipRow("terms", terms, "term"),
    );
  }

  private renderInlineGuidance(message: string): void {
    this.details.replaceChildren(el("p", "guidance", message));
    this.cards.replaceChildren();
  }

  private renderRetryBanner(): void {
    this.banner.replaceChildren();
    this.banner.hidden = false;
    this.banner.appendChild(el("span", "banner-text", "The service could not be reached."));
    const retry = el("button", "retry-button", "Retry");
    retry.type = "button";
    retry.addEventListener("click", () => void this.submitQuestion(this.lastQuestion));
    this.banner.appendChild(retry);
  }

  private renderCards(answers: AnswerEntry[]): void {
    this.cards.replaceChildren();
    if (answers.length === 0) {
      this.cards.appendChild(el("p", "no-answers", "No answers found."));
      return;
    }
    answers.forEach((answer, position) => {
      this.cards.appendChild(this.buildCard(answer, position + 1));
    });
  }

  private buildCard(answer: AnswerEntry, position: number): HTMLElement {
    const card = el("article", "card");
    card.dataset.pid = String(answer.pid);
    card.dataset.sid = String(answer.sid);

    const head = el("header", "card-head");
    head.appendChild(el("span", "card-rank", `#${position}`));
    head.appendChild(el("span", "card-source", `p${answer.pid} · s${answer.sid}`));
    head.appendChild(
      el(
        "span",
        "card-meta",
        `score ${answer.feedback_score} · matched ${answer.matched_terms}`,
      ),
    );

    const text = el("p", "card-text", answer.text);

    const tallies = el("span", "card-tallies");
    const renderTallies = (likes: number, dislikes: number) => {
      tallies.textContent = `+${likes} / −${dislikes}`;
    };
    renderTallies(answer.likes, answer.dislikes);

    const actions = el("footer", "card-actions");
    const likeButton = el("button", "vote-button vote-like", "👍");
    const dislikeButton = el("button", "vote-button vote-dislike", "👎");
    for (const [button, vote] of [
      [likeButton, "like"],
      [dislikeButton, "dislike"],
    ] as [HTMLButtonElement, Vote][]) {
      button.type = "button";
      button.addEventListener("click", () => {
        // disable both buttons until the vote is acknowledged: one click,
        // one request, no double counting
        likeButton.disabled = true;
        dislikeButton.disabled = true;
        void this.client
          .sendFeedback(answer.pid, answer.sid, vote)
          .then((ack) => renderTallies(ack.likes, ack.dislikes))
          .catch(() => this.showToast("Vote not recorded; try again."))
          .finally(() => {
            likeButton.disabled = false;
            dislikeButton.disabled = false;
          });
      });
    }
    actions.append(likeButton, dislikeButton, tallies);

    card.append(head, text, actions);
    return card;
  }

  private showToast(message: string): void {
    this.toast.textContent = message;
    this.toast.hidden = false;
    setTimeout(() => {
      this.toast.hidden = true;
    }, 4000);
  }
}

export function createApp(root: HTMLElement, options: AppOptions = {}): App {
  return new App(root, options);
}
